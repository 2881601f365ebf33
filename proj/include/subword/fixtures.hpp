#pragma once

#include "subword/hopf.hpp"

namespace swc::fixtures {

/// Q = (s1,s2,s1,s2,s1), pi = s1 s2 in A2.
SubwordInstance a2();
/// Q = (s1,s2,s3,s1,s2,s3,s1,s2,s1), pi = w0 in A3 (dual associahedron).
SubwordInstance a3_assoc();
/// Q = (s1,s2,s3)^3 + (s1,s2,s1), pi = w0 in A3 (multi-associahedron D_{8,2}).
SubwordInstance a3k2();
/// Q = (s0,s1,s2)^3, pi = s0 s1 s2 s0 s1 s2 in affine A2.
SubwordInstance affine_a2();

std::vector<std::vector<int>> a2_expected_facets();        // 0-based
std::vector<int> a3k2_featured_facet();                    // {1,3,7,8,9,10}, 0-based
std::vector<IVec> a3k2_expected_root_function();
std::vector<int> a3k2_flat_positions();                    // J_F = {1,3,5,6,8,9,11}, 0-based
std::vector<IVec> a3k2_expected_beta();
std::vector<int> affine_a2_featured_facet();               // {3,4,5}, 0-based
std::vector<IVec> affine_a2_expected_root_function();
std::vector<int> affine_a2_flat_positions();               // J_F = {2,3,5,6}, 0-based
std::vector<IVec> affine_a2_expected_beta();

/// The pentagon key for facet {2,3,5} and the three rank-1 keys a, b, c of
/// its coproduct.
BasisKey a2_key();
BasisKey key_a();  // (A1, (s,s), s, {2})
BasisKey key_b();  // (A1, (s,s), s, {1})
BasisKey key_c();  // (A1, (s), e, {1})

/// Degree <= 3 key corpus (>= 20 keys) built from the fixtures, cluster
/// instances, and their products.
std::vector<BasisKey> corpus();

}  // namespace swc::fixtures

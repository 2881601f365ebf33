#pragma once

#include <optional>
#include <vector>

#include "subword/coxeter.hpp"

namespace swc {

/// SC(Q, pi): faces are position sets whose complement in Q contains a
/// reduced expression of pi. Positions are 0-based internally.
struct SubwordInstance {
  CoxeterSystem sys;
  Word word;
  IMat pi;
  int pi_length = 0;
};

SubwordInstance make_instance(CoxeterSystem sys, Word word, const Word& pi_word);
SubwordInstance make_instance(CoxeterSystem sys, Word word, IMat pi);

/// Greedy left-to-right test: does the word contain a reduced expression
/// of pi as a subword?
bool contains_reduced(const CoxeterSystem& sys, const Word& word, const IMat& pi,
                      int pi_length);

struct FacetEnumeration {
  std::vector<std::vector<int>> facets;  // lexicographically sorted
  bool void_complex = false;
};

FacetEnumeration enumerate_facets(const SubwordInstance& inst);

bool is_face(const SubwordInstance& inst, const std::vector<int>& positions);
bool is_facet(const SubwordInstance& inst, const std::vector<int>& positions);

/// r_I(j) for j = 1..r: the prefix of complement letters left of j applied
/// to the j-th simple root.
std::vector<IVec> root_function(const SubwordInstance& inst, const std::vector<int>& facet);

struct FlipResult {
  std::vector<int> facet;  // I' = I \ {from} u {to}
  int from = -1;
  int to = -1;
};

/// Exchanges facet position i with the unique complement position carrying
/// +-r_I(i). Returns nullopt when no complement partner exists (possible on
/// non-spherical instances). Validates the sign rule and the reflection
/// update rule for the new root function.
std::optional<FlipResult> flip(const SubwordInstance& inst, const std::vector<int>& facet,
                               int position);

/// Rank of the root configuration {r_I(i) : i in I} equals the system rank.
/// Facet-independent; optionally re-checked on a second facet.
bool is_irreducible(const SubwordInstance& inst, const std::vector<int>& facet,
                    bool check_second_facet = false);

struct LinkInstance {
  SubwordInstance instance;
  std::vector<int> old_of_new;  // new position -> host position
  std::vector<int> new_of_old;  // host position -> new position, -1 if deleted
};

/// Deletes the letters at a face D; the facets of the result, pulled back,
/// are exactly {F \ D : F a facet containing D}.
LinkInstance link_instance(const SubwordInstance& inst, const std::vector<int>& deleted);

}  // namespace swc

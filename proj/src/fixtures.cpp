#include "subword/fixtures.hpp"

#include <initializer_list>
#include <set>

#include "subword/clusters.hpp"

namespace swc::fixtures {

namespace {

IVec vec(std::initializer_list<long> coords) {
  IVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const long c : coords) v(i++) = c;
  return v;
}

std::vector<int> shift_down(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (const int p : one_based) out.push_back(p - 1);
  return out;
}

}  // namespace

SubwordInstance a2() {
  return make_instance(build_system(coxeter_matrix_of_type("A2")), {0, 1, 0, 1, 0}, Word{0, 1});
}

SubwordInstance a3_assoc() {
  return make_instance(build_system(coxeter_matrix_of_type("A3")),
                       {0, 1, 2, 0, 1, 2, 0, 1, 0}, Word{0, 1, 0, 2, 1, 0});
}

SubwordInstance a3k2() {
  return make_instance(build_system(coxeter_matrix_of_type("A3")),
                       {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 0}, Word{0, 1, 0, 2, 1, 0});
}

SubwordInstance affine_a2() {
  return make_instance(build_system(coxeter_matrix_of_type("tA2")),
                       {0, 1, 2, 0, 1, 2, 0, 1, 2}, Word{0, 1, 2, 0, 1, 2});
}

std::vector<std::vector<int>> a2_expected_facets() {
  return {shift_down({1, 2, 5}), shift_down({2, 3, 5}), shift_down({3, 4, 5})};
}

std::vector<int> a3k2_featured_facet() { return shift_down({1, 3, 7, 8, 9, 10}); }

std::vector<IVec> a3k2_expected_root_function() {
  return {vec({1, 0, 0}), vec({0, 1, 0}),  vec({0, 1, 1}),   vec({1, 1, 0}),
          vec({1, 0, 0}), vec({1, 1, 1}),  vec({0, -1, 0}),  vec({0, 1, 1}),
          vec({-1, -1, -1}), vec({0, -1, 0}), vec({0, 1, 1}), vec({0, 0, 1})};
}

std::vector<int> a3k2_flat_positions() { return shift_down({1, 3, 5, 6, 8, 9, 11}); }

std::vector<IVec> a3k2_expected_beta() {
  return {vec({1, 0, 0}), vec({0, 1, 1}), vec({1, 0, 0}), vec({0, 1, 1}),
          vec({1, 0, 0}), vec({0, 1, 1}), vec({1, 0, 0})};
}

std::vector<int> affine_a2_featured_facet() { return shift_down({3, 4, 5}); }

std::vector<IVec> affine_a2_expected_root_function() {
  return {vec({1, 0, 0}),  vec({1, 1, 0}),  vec({2, 1, 1}),
          vec({0, 1, 0}),  vec({-1, -1, 0}), vec({2, 1, 1}),
          vec({2, 2, 1}),  vec({3, 2, 2}),  vec({3, 3, 2})};
}

std::vector<int> affine_a2_flat_positions() { return shift_down({2, 3, 5, 6}); }

std::vector<IVec> affine_a2_expected_beta() {
  return {vec({1, 1, 0}), vec({1, 0, 1}), vec({1, 1, 0}), vec({1, 0, 1})};
}

BasisKey a2_key() { return canonicalize(a2(), shift_down({2, 3, 5})); }

namespace {

BasisKey rank_one(const Word& word, std::initializer_list<int> facet) {
  const CoxeterSystem sys = build_system(coxeter_matrix_of_type("A1"));
  std::vector<int> f = shift_down(facet);
  Word pi_word;
  {
    const std::set<int> in(f.begin(), f.end());
    for (int p = 0; p < static_cast<int>(word.size()); ++p)
      if (!in.count(p)) pi_word.push_back(word[static_cast<size_t>(p)]);
  }
  return canonicalize(make_instance(sys, word, pi_word), f);
}

}  // namespace

BasisKey key_a() { return rank_one({0, 0}, {2}); }
BasisKey key_b() { return rank_one({0, 0}, {1}); }
BasisKey key_c() { return rank_one({0}, {1}); }

std::vector<BasisKey> corpus() {
  std::vector<BasisKey> keys;
  // rank 1
  keys.push_back(key_c());
  keys.push_back(key_b());
  keys.push_back(key_a());
  keys.push_back(rank_one({0, 0, 0}, {1, 2}));
  keys.push_back(rank_one({0, 0, 0}, {1, 3}));
  keys.push_back(rank_one({0, 0, 0}, {2, 3}));
  // rank 2: the pentagon facets
  {
    const SubwordInstance pentagon = a2();
    for (const auto& facet : enumerate_facets(pentagon).facets)
      keys.push_back(canonicalize(pentagon, facet));
  }
  // rank 2: two facets of the B2 cluster complex
  {
    const ClusterInstance b2 = cluster_instance(build_system(coxeter_matrix_of_type("B2")), {0, 1});
    const auto facets = enumerate_facets(b2.instance).facets;
    keys.push_back(canonicalize(b2.instance, facets.front()));
    keys.push_back(canonicalize(b2.instance, facets.back()));
  }
  // rank 2 product of rank-1 keys
  keys.push_back(key_product(key_a(), key_b()));
  keys.push_back(key_product(key_a(), key_c()));
  // rank 3 fixtures
  keys.push_back(canonicalize(a3_assoc(), shift_down({3, 4, 5})));
  keys.push_back(canonicalize(a3k2(), a3k2_featured_facet()));
  keys.push_back(canonicalize(affine_a2(), affine_a2_featured_facet()));
  {
    const ClusterInstance a3 =
        cluster_instance(build_system(coxeter_matrix_of_type("A3")), {1, 0, 2});
    const auto facets = enumerate_facets(a3.instance).facets;
    keys.push_back(canonicalize(a3.instance, facets.front()));
  }
  // rank 3 products
  keys.push_back(key_product(key_product(key_a(), key_b()), key_c()));
  keys.push_back(key_product(a2_key(), key_c()));
  keys.push_back(key_product(a2_key(), key_b()));
  // dedup, preserving order
  std::vector<BasisKey> out;
  for (const BasisKey& k : keys) {
    bool known = false;
    for (const BasisKey& seen : out)
      if (seen == k) known = true;
    if (!known) out.push_back(k);
  }
  return out;
}

}  // namespace swc::fixtures

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subword/fixtures.hpp"
#include "subword/subword.hpp"

using namespace swc;

namespace {

/// Independent oracle: all subsets of the right size whose complement
/// multiplies to pi reduced, checked directly from the definitions.
std::set<std::vector<int>> brute_force_facets(const SubwordInstance& inst) {
  const int r = static_cast<int>(inst.word.size());
  const int size = r - inst.pi_length;
  std::set<std::vector<int>> out;
  if (size < 0) return out;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == size) {
      Word complement;
      for (int p = 0; p < r; ++p)
        if (!std::binary_search(subset.begin(), subset.end(), p))
          complement.push_back(inst.word[static_cast<size_t>(p)]);
      if (word_element(inst.sys, complement) == inst.pi &&
          element_length(inst.sys, inst.pi) == static_cast<int>(complement.size()))
        out.insert(subset);
      return;
    }
    for (int p = from; p < r; ++p) {
      subset.push_back(p);
      self(self, p + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void check_against_oracle(const SubwordInstance& inst) {
  const auto facets = enumerate_facets(inst);
  const auto expected = brute_force_facets(inst);
  CHECK(facets.facets.size() == expected.size());
  CHECK(std::set<std::vector<int>>(facets.facets.begin(), facets.facets.end()) == expected);
  CHECK(std::is_sorted(facets.facets.begin(), facets.facets.end()));
}

}  // namespace

TEST_CASE("facet enumeration matches the A2 example and the oracle") {
  const SubwordInstance a2 = fixtures::a2();
  const auto facets = enumerate_facets(a2);
  CHECK(facets.facets == fixtures::a2_expected_facets());
  check_against_oracle(a2);
}

TEST_CASE("facet enumeration oracle on the other fixtures") {
  check_against_oracle(fixtures::a3_assoc());
  check_against_oracle(fixtures::affine_a2());
  CHECK(enumerate_facets(fixtures::a3_assoc()).facets.size() == 14);
}

TEST_CASE("empty word, void complexes") {
  const CoxeterSystem a1 = build_system(coxeter_matrix_of_type("A1"));
  const SubwordInstance trivial = make_instance(a1, {}, Word{});
  const auto facets = enumerate_facets(trivial);
  CHECK(!facets.void_complex);
  REQUIRE(facets.facets.size() == 1);
  CHECK(facets.facets[0].empty());

  const SubwordInstance impossible = make_instance(a1, {}, Word{0});
  const auto none = enumerate_facets(impossible);
  CHECK(none.void_complex);
  CHECK(none.facets.empty());
}

TEST_CASE("the affine A2 fixture has seven facets, not six") {
  const auto facets = enumerate_facets(fixtures::affine_a2());
  CHECK(facets.facets.size() == 7);
  for (int start = 0; start < 7; ++start)
    CHECK(std::find(facets.facets.begin(), facets.facets.end(),
                    std::vector<int>{start, start + 1, start + 2}) != facets.facets.end());
}

TEST_CASE("is_facet") {
  const SubwordInstance a3k2 = fixtures::a3k2();
  CHECK(is_facet(a3k2, fixtures::a3k2_featured_facet()));
  const SubwordInstance a2 = fixtures::a2();
  CHECK(!is_facet(a2, {0, 2, 4}));
  CHECK(!is_facet(a2, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(is_facet(a2, {0, 7}), std::invalid_argument);
}

TEST_CASE("root function matches the worked examples") {
  const SubwordInstance a3k2 = fixtures::a3k2();
  const auto roots = root_function(a3k2, fixtures::a3k2_featured_facet());
  const auto expected = fixtures::a3k2_expected_root_function();
  REQUIRE(roots.size() == expected.size());
  for (size_t i = 0; i < roots.size(); ++i) CHECK(roots[i] == expected[i]);

  const SubwordInstance ta2 = fixtures::affine_a2();
  const auto affine = root_function(ta2, fixtures::affine_a2_featured_facet());
  const auto affine_expected = fixtures::affine_a2_expected_root_function();
  REQUIRE(affine.size() == affine_expected.size());
  for (size_t i = 0; i < affine.size(); ++i) CHECK(affine[i] == affine_expected[i]);

  // r_I(1) is always the first simple root
  CHECK(root_function(fixtures::a2(), {0, 1, 4})[0] == simple_root(fixtures::a2().sys, 0));
}

TEST_CASE("complement roots are positive") {
  const SubwordInstance inst = fixtures::a3_assoc();
  for (const auto& facet : enumerate_facets(inst).facets) {
    const auto roots = root_function(inst, facet);
    for (int p = 0; p < static_cast<int>(roots.size()); ++p)
      if (!std::binary_search(facet.begin(), facet.end(), p))
        CHECK(root_sign(roots[static_cast<size_t>(p)]) > 0);
  }
}

TEST_CASE("flips") {
  const SubwordInstance a3k2 = fixtures::a3k2();
  const auto facet = fixtures::a3k2_featured_facet();
  const auto moved = flip(a3k2, facet, 2);  // paper position 3
  REQUIRE(moved.has_value());
  CHECK(moved->to == 10);  // paper position 11
  CHECK(moved->facet == std::vector<int>{0, 6, 7, 8, 9, 10});

  const SubwordInstance a2 = fixtures::a2();
  const auto a2_moved = flip(a2, {1, 2, 4}, 2);
  REQUIRE(a2_moved.has_value());
  CHECK(a2_moved->to == 0);
  CHECK(a2_moved->facet == std::vector<int>{0, 1, 4});

  // flipping back is the identity
  const auto back = flip(a2, a2_moved->facet, a2_moved->to);
  REQUIRE(back.has_value());
  CHECK(back->facet == std::vector<int>{1, 2, 4});
  CHECK(back->to == 2);

  CHECK_THROWS_AS(flip(a2, {1, 2, 4}, 0), std::invalid_argument);
}

TEST_CASE("affine instances have non-flippable positions") {
  const SubwordInstance ta2 = fixtures::affine_a2();
  int non_flippable = 0;
  for (const auto& facet : enumerate_facets(ta2).facets)
    for (const int p : facet)
      if (!flip(ta2, facet, p)) ++non_flippable;
  CHECK(non_flippable > 0);
}

TEST_CASE("flip connectedness of the facet graph") {
  for (const SubwordInstance& inst :
       {fixtures::a2(), fixtures::a3_assoc(), fixtures::a3k2(), fixtures::affine_a2()}) {
    const auto facets = enumerate_facets(inst).facets;
    std::vector<bool> seen(facets.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t visited = 1;
    while (!stack.empty()) {
      const auto& facet = facets[stack.back()];
      stack.pop_back();
      for (const int p : facet) {
        const auto moved = flip(inst, facet, p);
        if (!moved) continue;
        const auto it = std::lower_bound(facets.begin(), facets.end(), moved->facet);
        REQUIRE(it != facets.end());
        const size_t idx = static_cast<size_t>(it - facets.begin());
        if (!seen[idx]) {
          seen[idx] = true;
          ++visited;
          stack.push_back(idx);
        }
      }
    }
    CHECK(visited == facets.size());
  }
}

TEST_CASE("irreducibility") {
  const SubwordInstance a2 = fixtures::a2();
  CHECK(is_irreducible(a2, {1, 2, 4}, true));

  // the reducible link from the multi-associahedron example: delete the two
  // positions of the featured facet whose roots stay outside the flat
  const SubwordInstance a3k2 = fixtures::a3k2();
  const LinkInstance link = link_instance(a3k2, {6, 9});  // paper letters 7 and 10
  const auto facets = enumerate_facets(link.instance).facets;
  REQUIRE(!facets.empty());
  CHECK(!is_irreducible(link.instance, facets.front()));

  const CoxeterSystem a1 = build_system(coxeter_matrix_of_type("A1"));
  const SubwordInstance trivial = make_instance(a1, {}, Word{});
  CHECK(!is_irreducible(trivial, {}));  // rank 1, empty configuration
}

TEST_CASE("links") {
  const SubwordInstance ta2 = fixtures::affine_a2();
  const LinkInstance link = link_instance(ta2, {3});  // paper vertex 4
  std::set<std::vector<int>> host_facets;
  for (const auto& f : enumerate_facets(link.instance).facets) {
    std::vector<int> host;
    for (const int p : f) host.push_back(link.old_of_new[static_cast<size_t>(p)]);
    host_facets.insert(host);
  }
  const std::set<std::vector<int>> expected = {{1, 2}, {2, 4}, {4, 5}};
  CHECK(host_facets == expected);

  // empty deletion keeps the complex
  const LinkInstance same = link_instance(ta2, {});
  CHECK(enumerate_facets(same.instance).facets == enumerate_facets(ta2).facets);

  CHECK_THROWS_AS(link_instance(fixtures::a2(), {0, 2, 4}), std::invalid_argument);
}

TEST_CASE("facet sizes") {
  for (const SubwordInstance& inst : {fixtures::a2(), fixtures::a3k2()}) {
    const int expected = static_cast<int>(inst.word.size()) - inst.pi_length;
    for (const auto& facet : enumerate_facets(inst).facets)
      CHECK(static_cast<int>(facet.size()) == expected);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subword/fixtures.hpp"
#include "subword/hopf.hpp"
#include "subword/verify.hpp"

using namespace swc;

namespace {

HopfVector expected_a2_antipode() {
  HopfVector v;
  v.add(fixtures::a2_key(), -1);
  v.add(key_product(fixtures::key_a(), fixtures::key_b()), 2);
  v.add(key_product(fixtures::key_a(), fixtures::key_c()), 2);
  v.add(key_product(fixtures::key_b(), fixtures::key_c()), 2);
  return v;
}

}  // namespace

TEST_CASE("commutation normal form") {
  Eigen::MatrixXi m(2, 2);
  m << 2, 2, 2, 2;  // two commuting generators
  const auto [word, perm] = commutation_normal_form({1, 0, 1, 0}, m);
  CHECK(word == Word{0, 0, 1, 1});
  CHECK(perm == std::vector<int>{1, 3, 0, 2});

  Eigen::MatrixXi a2(2, 2);
  a2 << 2, 3, 3, 2;
  const auto [fixed, id] = commutation_normal_form({1, 0, 1}, a2);
  CHECK(fixed == Word{1, 0, 1});
}

TEST_CASE("canonicalization identifies relabeled commuted tuples") {
  const CoxeterSystem a1a1 = build_system(coxeter_product(
      coxeter_matrix_of_type("A1"), coxeter_matrix_of_type("A1")));
  const BasisKey first =
      canonicalize(make_instance(a1a1, {0, 1, 0, 1}, Word{0, 1}), {1, 3});
  const BasisKey second =
      canonicalize(make_instance(a1a1, {1, 0, 1, 0}, Word{1, 0}), {1, 3});
  CHECK(first == second);

  // idempotence
  const SubwordInstance inst = key_instance(first);
  CHECK(canonicalize(inst, first.facet) == first);
}

TEST_CASE("canonicalization errors") {
  const SubwordInstance a2 = fixtures::a2();
  CHECK_THROWS_AS(canonicalize(a2, {1, 2, 4}, 1), std::invalid_argument);  // rank bound
  // a reducible tuple: A2 word using only one generator
  const SubwordInstance red = make_instance(a2.sys, {0, 0}, Word{0});
  CHECK_THROWS_WITH_AS(canonicalize(red, {0}), doctest::Contains("reducible"),
                       std::invalid_argument);
}

TEST_CASE("product follows the shift rule and is commutative") {
  const BasisKey ab = key_product(fixtures::key_a(), fixtures::key_b());
  // (A1 x A1, (s,s,t,t), s t, shifted facet {2,3})
  const CoxeterSystem a1a1 = build_system(coxeter_product(
      coxeter_matrix_of_type("A1"), coxeter_matrix_of_type("A1")));
  const BasisKey expected = canonicalize(make_instance(a1a1, {0, 0, 1, 1}, Word{0, 1}), {1, 2});
  CHECK(ab == expected);
  CHECK(ab == key_product(fixtures::key_b(), fixtures::key_a()));
  CHECK(key_product(ab, unit_key()) == ab);
  CHECK(key_product(unit_key(), ab) == ab);
}

TEST_CASE("coproduct of the pentagon key") {
  const BasisKey x = fixtures::a2_key();
  const BasisKey a = fixtures::key_a();
  const BasisKey b = fixtures::key_b();
  const BasisKey c = fixtures::key_c();
  CHECK(a.word == Word{0, 0});
  CHECK(a.facet == std::vector<int>{1});
  CHECK(b.facet == std::vector<int>{0});
  CHECK(c.word == Word{0});

  Tensor2 expected;
  tensor_add(expected, x, unit_key(), 1);
  tensor_add(expected, unit_key(), x, 1);
  tensor_add(expected, a, b, 1);
  tensor_add(expected, a, c, 1);
  tensor_add(expected, b, a, 1);
  tensor_add(expected, b, c, 1);
  tensor_add(expected, c, a, 1);
  tensor_add(expected, c, b, 1);
  CHECK(coproduct(single(x)) == expected);
}

TEST_CASE("coproduct of the unit and counit") {
  Tensor2 expected;
  tensor_add(expected, unit_key(), unit_key(), 1);
  CHECK(coproduct(hopf_unit()) == expected);
  CHECK(counit(hopf_unit()) == 1);
  CHECK(counit(single(fixtures::a2_key())) == 0);
  HopfVector mix = hopf_unit();
  mix *= 3;
  mix += single(fixtures::a2_key());
  CHECK(counit(mix) == 3);
}

TEST_CASE("takeuchi antipode on small keys") {
  CHECK(takeuchi_antipode(hopf_unit()) == hopf_unit());
  const BasisKey g = fixtures::key_c();
  CHECK(takeuchi_antipode(single(g)) == single(g, -1));
  CHECK(takeuchi_antipode(single(fixtures::a2_key())) == expected_a2_antipode());
}

TEST_CASE("cancellation-free antipode agrees and is sign coherent") {
  CHECK(antipode(single(fixtures::a2_key())) == expected_a2_antipode());
  CHECK(antipode(single(fixtures::key_b())) == single(fixtures::key_b(), -1));
  for (const BasisKey& key : fixtures::corpus()) {
    CHECK(antipode(single(key)) == takeuchi_antipode(single(key)));
    for (const AntipodeClassTerm& term : antipode_classes(key))
      CHECK(term.orientation_count >= 1);
  }
}

TEST_CASE("the A2 antipode classes carry the expected orientation counts") {
  const auto classes = antipode_classes(fixtures::a2_key());
  REQUIRE(classes.size() == 4);  // the full flat plus three two-line classes
  int singletons = 0, pairs = 0;
  for (const auto& term : classes) {
    if (term.parts.size() == 1) {
      ++singletons;
      CHECK(term.orientation_count == 1);
      CHECK(term.sign == -1);
    } else {
      ++pairs;
      CHECK(term.parts.size() == 2);
      CHECK(term.orientation_count == 2);  // one non-orthogonal edge
      CHECK(term.sign == 1);
    }
  }
  CHECK(singletons == 1);
  CHECK(pairs == 3);
}

TEST_CASE("repeated basis elements in the multi-associahedron antipode") {
  const SubwordInstance a3k2 = fixtures::a3k2();
  const BasisKey key = canonicalize(a3k2, fixtures::a3k2_featured_facet());
  const auto classes = antipode_classes(key);
  bool repeated = false;
  for (size_t i = 0; i < classes.size() && !repeated; ++i)
    for (size_t j = i + 1; j < classes.size() && !repeated; ++j)
      if (classes[i].key == classes[j].key && classes[i].parts != classes[j].parts)
        repeated = true;
  CHECK(repeated);
}

TEST_CASE("psi0 and part graphs") {
  const SubwordInstance a2 = fixtures::a2();
  const RootList rl = root_list(a2, {1, 2, 4});
  const Flat line_a = flat_at(rl, {0, 2});
  const Flat line_b = flat_at(rl, {1, 3});

  std::vector<int> fmap;
  const FlatDecomposition sorted = psi0(rl, {line_b, line_a}, &fmap);
  REQUIRE(sorted.size() == 2);
  CHECK(sorted[0].positions == line_a.positions);
  CHECK(sorted[1].positions == line_b.positions);
  CHECK(fmap == std::vector<int>{1, 0});

  const PartGraph g = part_graph(rl, {line_b, line_a});
  REQUIRE(g.edges.size() == 1);  // the two lines are not orthogonal
  CHECK(g.directed == std::vector<std::pair<int, int>>{{1, 0}});

  // sigma for the reversed orientation is the transposition
  const auto sigma = sigma_permutation(g, {{0, 1}});
  CHECK(sigma == std::vector<int>{0, 1});
  const auto sigma2 = sigma_permutation(g, {{1, 0}});
  CHECK(sigma2 == std::vector<int>{1, 0});

  // two orthogonal parts have no edges
  const CoxeterSystem a1a1 = build_system(coxeter_product(
      coxeter_matrix_of_type("A1"), coxeter_matrix_of_type("A1")));
  const SubwordInstance prod = make_instance(a1a1, {0, 0, 1, 1}, Word{0, 1});
  const RootList rlp = root_list(prod, {1, 2});
  const PartGraph trivial =
      part_graph(rlp, {closure(rlp, {0, 2})});  // one part, splits into two lines
  CHECK(trivial.vertex_count == 2);
  CHECK(trivial.edges.empty());
}

TEST_CASE("refinement preserves part graphs") {
  for (const BasisKey& key : fixtures::corpus()) {
    if (key.degree() == 0 || key.degree() > 3) continue;
    const SubwordInstance inst = key_instance(key);
    const RootList rl = root_list(inst, key.facet);
    for (const FlatDecomposition& d : flat_decompositions(rl, std::nullopt)) {
      FlatDecomposition refined = maximal_refinement(rl, d);
      if (!refinement_leq(rl, d, refined)) continue;
      const PartGraph coarse = part_graph(rl, d);
      const PartGraph fine = part_graph(rl, refined);
      CHECK(coarse.edges == fine.edges);
      CHECK(coarse.directed == fine.directed);
    }
  }
}

TEST_CASE("acyclic orientation counts") {
  CHECK(count_acyclic_orientations(4, {}) == 1);
  const std::vector<std::pair<int, int>> k3 = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(count_acyclic_orientations(3, k3) == 6);
  const std::vector<std::pair<int, int>> p3 = {{0, 1}, {1, 2}};
  CHECK(count_acyclic_orientations(3, p3) == 4);

  // cross-check against |chi(-1)| on random graphs
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5u);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 == 0) edges.emplace_back(i, j);
    Int chi = chromatic_polynomial_at(n, edges, Int(-1));
    if (chi < 0) chi = -chi;
    CHECK(count_acyclic_orientations(n, edges) == chi);
  }
}

TEST_CASE("bialgebra axioms on a small sample") {
  const std::vector<BasisKey> sample = {unit_key(), fixtures::key_a(), fixtures::key_b(),
                                        fixtures::key_c(), fixtures::a2_key()};
  const BialgebraReport report = verify_bialgebra(sample);
  if (!report.pass)
    for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.pass);
}

TEST_CASE("top-to-random") {
  const BasisKey x = fixtures::a2_key();
  HopfVector expected;
  expected.add(key_product(fixtures::key_a(), fixtures::key_b()), 2);
  expected.add(key_product(fixtures::key_a(), fixtures::key_c()), 2);
  expected.add(key_product(fixtures::key_b(), fixtures::key_c()), 2);
  CHECK(top_to_random(single(x)) == expected);

  const BasisKey ab = key_product(fixtures::key_a(), fixtures::key_b());
  CHECK(top_to_random(single(ab)) == single(ab, 2));

  CHECK(top_to_random(hopf_unit()).is_zero());
  CHECK(top_to_random(single(fixtures::key_c())).is_zero());
}

TEST_CASE("filtration of the top-to-random image") {
  for (const BasisKey& key : fixtures::corpus()) {
    const HopfVector image = top_to_random(single(key));
    for (const auto& [term, coeff] : image.terms) {
      (void)coeff;
      CHECK(term.degree() == key.degree());
      CHECK(term.word_length() <= key.word_length());
      CHECK(term.max_finite_m() <= key.max_finite_m());
    }
  }
}

TEST_CASE("chipping reaches gems") {
  const ChipTrajectory trajectory = chip_to_gems(single(fixtures::a2_key()), 10);
  CHECK(trajectory.stabilized_at == 1);
  for (const auto& [key, coeff] : trajectory.states.back().terms) {
    (void)coeff;
    CHECK(is_gem(key));
  }
  CHECK(chip_to_gems(single(fixtures::key_b()), 10).stabilized_at == 0);
}

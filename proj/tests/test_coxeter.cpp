#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subword/coxeter.hpp"

using namespace swc;

namespace {

IVec vec(std::initializer_list<long> coords) {
  IVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const long c : coords) v(i++) = c;
  return v;
}

Eigen::MatrixXi mat2(int m01) {
  Eigen::MatrixXi m(2, 2);
  m << 2, m01, m01, 2;
  return m;
}

}  // namespace

TEST_CASE("default cartan assignment") {
  const CoxeterSystem a2 = build_system(mat2(3));
  CHECK(a2.cartan(0, 1) == -1);
  CHECK(a2.cartan(1, 0) == -1);
  CHECK(a2.bilinear == to_rat(a2.cartan));

  const CoxeterSystem b2 = build_system(mat2(4));
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  // d_i A_ij = d_j A_ji, up to global scale: d = (1, 1/2)
  CHECK(b2.symmetrizer(1) / b2.symmetrizer(0) == Rat(1, 2));
  CHECK(b2.bilinear(0, 1) == b2.bilinear(1, 0));

  Eigen::MatrixXi rank1(1, 1);
  rank1 << 2;
  CHECK(build_system(rank1).cartan(0, 0) == 2);

  const CoxeterSystem g2 = build_system(mat2(6));
  CHECK(g2.cartan(1, 0) == -3);
  const CoxeterSystem ta1 = build_system(mat2(kInfinity));
  CHECK(ta1.cartan(0, 1) == -2);
  CHECK(ta1.cartan(1, 0) == -2);
}

TEST_CASE("coxeter matrix validation names the offending entry") {
  Eigen::MatrixXi bad = mat2(5);
  CHECK_THROWS_WITH_AS(build_system(bad), doctest::Contains("(1,2)"),
                       std::invalid_argument);
  Eigen::MatrixXi asym(2, 2);
  asym << 2, 3, 4, 2;
  CHECK_THROWS_AS(build_system(asym), std::invalid_argument);
  IMat cartan(2, 2);
  cartan << 2, -1, -1, 2;
  CHECK_THROWS_WITH_AS(build_system(mat2(4), cartan), doctest::Contains("m=3"),
                       std::invalid_argument);
}

TEST_CASE("user cartan override") {
  IMat cartan(2, 2);
  cartan << 2, -1, -4, 2;  // product 4 -> infinity
  const CoxeterSystem sys = build_system(mat2(kInfinity), cartan);
  CHECK(sys.cartan == cartan);
}

TEST_CASE("root action") {
  const CoxeterSystem a2 = build_system(coxeter_matrix_of_type("A2"));
  CHECK(act(a2, 0, simple_root(a2, 1)) == vec({1, 1}));
  CHECK(act(a2, 0, simple_root(a2, 0)) == vec({-1, 0}));
  const CoxeterSystem ta2 = build_system(coxeter_matrix_of_type("tA2"));
  CHECK(act(ta2, 0, simple_root(ta2, 1)) == vec({1, 1, 0}));
  // the affine A1 action from the paper: s0(alpha1) = 2 alpha0 + alpha1
  const CoxeterSystem ta1 = build_system(coxeter_matrix_of_type("tA1"));
  CHECK(act(ta1, 0, simple_root(ta1, 1)) == vec({2, 1}));
}

TEST_CASE("action is an involution and preserves the form") {
  std::mt19937 rng(7);
  for (const char* name : {"A3", "B3", "tA2"}) {
    const CoxeterSystem sys = build_system(coxeter_matrix_of_type(name));
    for (int trial = 0; trial < 25; ++trial) {
      Word w;
      for (int i = 0; i < 6; ++i)
        w.push_back(static_cast<int>(rng() % static_cast<unsigned>(sys.rank)));
      const auto inv = inversions(sys, w);
      const IVec beta = inv.back();
      for (int i = 0; i < sys.rank; ++i) {
        CHECK(act(sys, i, act(sys, i, beta)) == beta);
        for (int j = 0; j < sys.rank; ++j) {
          const IVec gb = act(sys, i, beta);
          const IVec ga = act(sys, i, simple_root(sys, j));
          CHECK(form(sys, ga, gb) == form(sys, simple_root(sys, j), beta));
        }
      }
    }
  }
}

TEST_CASE("words and lengths") {
  const CoxeterSystem a2 = build_system(coxeter_matrix_of_type("A2"));
  CHECK(word_element(a2, {}) == identity_element(a2));
  CHECK(element_length(a2, word_element(a2, {})) == 0);
  CHECK(word_element(a2, {0, 1, 0, 1, 0, 1}) == identity_element(a2));
  CHECK(element_length(a2, word_element(a2, {0, 1, 0})) == 3);
  CHECK(is_reduced(a2, {0, 1, 0}));
  CHECK(!is_reduced(a2, {0, 0}));
}

TEST_CASE("inversion sequences match the worked examples") {
  const CoxeterSystem a2 = build_system(coxeter_matrix_of_type("A2"));
  const auto inv = inversions(a2, {0, 1, 0, 1, 0, 1, 0, 1});
  const std::vector<IVec> expected = {vec({1, 0}),  vec({1, 1}),  vec({0, 1}),
                                      vec({-1, 0}), vec({-1, -1}), vec({0, -1}),
                                      vec({1, 0}),  vec({1, 1})};
  REQUIRE(inv.size() == expected.size());
  for (size_t i = 0; i < inv.size(); ++i) CHECK(inv[i] == expected[i]);

  const CoxeterSystem ta1 = build_system(coxeter_matrix_of_type("tA1"));
  const auto affine = inversions(ta1, {1, 0, 1, 1});
  const std::vector<IVec> expected_affine = {vec({0, 1}), vec({1, 2}), vec({2, 3}),
                                             vec({-2, -3})};
  REQUIRE(affine.size() == 4);
  for (size_t i = 0; i < affine.size(); ++i) CHECK(affine[i] == expected_affine[i]);

  CHECK(inversions(ta1, {}).empty());
}

TEST_CASE("reduced words have distinct positive inversions") {
  std::mt19937 rng(11);
  for (const char* name : {"A3", "B3", "tA2"}) {
    const CoxeterSystem sys = build_system(coxeter_matrix_of_type(name));
    for (int trial = 0; trial < 40; ++trial) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 8u);
      for (int i = 0; i < len; ++i)
        w.push_back(static_cast<int>(rng() % static_cast<unsigned>(sys.rank)));
      const int l = element_length(sys, word_element(sys, w));
      CHECK(l <= len);
      CHECK((l == len) == is_reduced(sys, w));
      if (is_reduced(sys, w)) {
        const auto inv = inversions(sys, w);
        for (size_t i = 0; i < inv.size(); ++i) {
          CHECK(root_sign(inv[i]) > 0);
          for (size_t j = i + 1; j < inv.size(); ++j) CHECK(inv[i] != inv[j]);
        }
      }
    }
  }
}

TEST_CASE("finiteness and longest element") {
  const CoxeterSystem a2 = build_system(coxeter_matrix_of_type("A2"));
  const Finiteness fa2 = finiteness_and_longest(a2);
  REQUIRE(fa2.finite);
  CHECK(*fa2.w0 == word_element(a2, {0, 1, 0}));
  CHECK(element_length(a2, *fa2.w0) == 3);

  CHECK(!finiteness_and_longest(build_system(coxeter_matrix_of_type("tA2"))).finite);
  CHECK(!finiteness_and_longest(build_system(coxeter_matrix_of_type("tA1"))).finite);

  const CoxeterSystem a1 = build_system(coxeter_matrix_of_type("A1"));
  CHECK(*finiteness_and_longest(a1).w0 == generator(a1, 0));

  // positive root counts fix l(w0)
  CHECK(element_length(build_system(coxeter_matrix_of_type("B3")),
                       *finiteness_and_longest(build_system(coxeter_matrix_of_type("B3"))).w0) ==
        9);
  CHECK(element_length(build_system(coxeter_matrix_of_type("D4")),
                       *finiteness_and_longest(build_system(coxeter_matrix_of_type("D4"))).w0) ==
        12);
}

TEST_CASE("root enumeration agrees with a brute-force oracle") {
  for (const char* name : {"A2", "B2", "tA1", "tA2"}) {
    const CoxeterSystem sys = build_system(coxeter_matrix_of_type(name));
    const Int bound = 6;
    const auto listed = positive_roots_up_to_height(sys, bound);
    // oracle: filter every nonnegative vector of height <= bound with is_root
    std::vector<IVec> expected;
    IVec v = IVec::Zero(sys.rank);
    auto rec = [&](auto&& self, int i, long remaining) -> void {
      if (i == sys.rank) {
        if (height(v) > 0 && is_root(sys, v)) expected.push_back(v);
        return;
      }
      for (long c = 0; c <= remaining; ++c) {
        v(i) = c;
        self(self, i + 1, remaining - c);
      }
      v(i) = 0;
    };
    rec(rec, 0, 6);
    CHECK(listed.size() == expected.size());
    for (const IVec& r : expected)
      CHECK(std::find(listed.begin(), listed.end(), r) != listed.end());
  }
}

TEST_CASE("subsystem restriction of a word") {
  const CoxeterSystem a2 = build_system(coxeter_matrix_of_type("A2"));
  SUBCASE("span of alpha2 in A2") {
    const RootSubsystem sub = RootSubsystem::span_of_roots(a2, {simple_root(a2, 1)});
    const RestrictedWord r = restrict_inversions(a2, {0, 1, 0}, sub);
    REQUIRE(r.word.size() == 1);
    CHECK(r.simples.size() == 1);
    CHECK(r.simples[0] == simple_root(a2, 1));
    CHECK(r.kept == std::vector<int>{2});
  }
  SUBCASE("full span returns the word itself") {
    std::vector<IVec> all = {simple_root(a2, 0), simple_root(a2, 1)};
    const RootSubsystem sub = RootSubsystem::span_of_roots(a2, all);
    const Word p = {0, 1, 1, 0, 1};
    const RestrictedWord r = restrict_inversions(a2, p, sub);
    REQUIRE(r.word.size() == p.size());
    for (size_t i = 0; i < p.size(); ++i)
      CHECK(r.simples[static_cast<size_t>(r.word[i])] ==
            simple_root(a2, p[i]));
  }
  SUBCASE("explicit long-root A1xA1 inside B2") {
    const CoxeterSystem b2 = build_system(coxeter_matrix_of_type("B2"));
    const IVec long1 = simple_root(b2, 0);
    const IVec long2 = vec({1, 2});
    CHECK(form(b2, long1, long2) == 0);
    const RootSubsystem sub = RootSubsystem::explicit_simples(b2, {long1, long2});
    CHECK(sub.contains(long1));
    CHECK(sub.contains(IVec(-long2)));
    CHECK(!sub.contains(simple_root(b2, 1)));
    CHECK(!sub.contains(vec({1, 1})));
    CHECK(sub.is_simple(long2));
  }
  SUBCASE("affine subsystem simplicity is not fooled by height") {
    // inside tA2, the subsystem {+-(alpha0 + k delta)} is infinite dihedral;
    // alpha0 + delta is a positive root of it but not simple
    const CoxeterSystem ta2 = build_system(coxeter_matrix_of_type("tA2"));
    const IVec alpha0 = simple_root(ta2, 0);
    const IVec other = vec({0, 1, 1});  // delta - alpha0
    const RootSubsystem sub = RootSubsystem::span_of_roots(ta2, {alpha0, other});
    CHECK(sub.is_simple(alpha0));
    CHECK(sub.is_simple(other));
    const IVec tall = vec({2, 1, 1});  // alpha0 + delta
    CHECK(is_root(ta2, tall));
    CHECK(sub.contains(tall));
    CHECK(!sub.is_simple(tall));
  }
}

TEST_CASE("parabolic restriction of a sorting word stays a sorting word") {
  // restrict inv(w0(c)) for c = s1 s2 s3 in A3 to the parabolic {s1, s2}
  const CoxeterSystem a3 = build_system(coxeter_matrix_of_type("A3"));
  const Finiteness fin = finiteness_and_longest(a3);
  // greedy c-sorting word of w0 without the clusters module
  Word w0c;
  {
    IMat u_inv = inverse_element(a3, *fin.w0);
    int taken = 0;
    while (taken < 6) {
      for (int letter : {0, 1, 2}) {
        if (taken == 6) break;
        if (root_sign(u_inv.col(letter)) < 0) {
          u_inv = u_inv * generator(a3, letter);
          w0c.push_back(letter);
          ++taken;
        }
      }
    }
  }
  const RootSubsystem sub =
      RootSubsystem::span_of_roots(a3, {simple_root(a3, 0), simple_root(a3, 1)});
  const RestrictedWord r = restrict_inversions(a3, w0c, sub);
  // the restriction is inv(P') for P' ~ w0(c') with c' = s1 s2 in the
  // parabolic A2; its letters over the discovered simples are alpha1, alpha2
  REQUIRE(r.simples.size() == 2);
  CHECK(r.simples[0] == simple_root(a3, 0));
  CHECK(r.simples[1] == simple_root(a3, 1));
  CHECK(r.word == Word{0, 1, 0});
}

TEST_CASE("element inverse and word element assertions") {
  const CoxeterSystem b2 = build_system(coxeter_matrix_of_type("B2"));
  const IMat g = word_element(b2, {0, 1, 0});
  CHECK(IMat(g * inverse_element(b2, g)) == identity_element(b2));
}

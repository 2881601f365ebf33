#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subword/flats.hpp"

namespace swc {

/// Canonical form of a tuple (W, Q, pi, I): the lexicographically least
/// (coxeter matrix, commutation-normal word, transported facet) over all
/// generator relabelings preserving the Coxeter matrix. pi is derivable as
/// the product of the complement letters.
struct BasisKey {
  Eigen::MatrixXi coxeter;
  Word word;
  std::vector<int> facet;

  int degree() const { return static_cast<int>(coxeter.rows()); }
  int word_length() const { return static_cast<int>(word.size()); }
  /// Largest finite off-diagonal Coxeter entry (2 when none).
  int max_finite_m() const;

  bool operator==(const BasisKey& other) const;
  bool operator<(const BasisKey& other) const;
};

BasisKey unit_key();

/// Least word in the commutation class, by greedily emitting the smallest
/// letter whose occurrence has no earlier non-commuting unemitted letter.
/// Returns the word and the permutation new index -> old index.
std::pair<Word, std::vector<int>> commutation_normal_form(const Word& word,
                                                          const Eigen::MatrixXi& coxeter);

inline constexpr int kCanonicalizationRankBound = 8;

/// Canonical key of an irreducible tuple. Validates the facet and
/// irreducibility in the instance's own realization; the relabeling search
/// is brute force over matrix-preserving permutations, capped by the rank
/// bound.
BasisKey canonicalize(const SubwordInstance& inst, const std::vector<int>& facet,
                      int rank_bound = kCanonicalizationRankBound);
BasisKey canonicalize(const RestrictedTuple& tuple,
                      int rank_bound = kCanonicalizationRankBound);

/// Default-Cartan realization of a key.
SubwordInstance key_instance(const BasisKey& key);

Word complement_word(const Word& word, const std::vector<int>& facet);

/// Finite rational linear combination of basis keys.
struct HopfVector {
  std::map<BasisKey, Rat> terms;

  void add(const BasisKey& key, const Rat& coeff);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const HopfVector& other) const { return terms == other.terms; }
  HopfVector& operator+=(const HopfVector& other);
  HopfVector& operator*=(const Rat& scalar);
};

HopfVector hopf_unit();
HopfVector single(const BasisKey& key, const Rat& coeff = 1);

using Tensor2 = std::map<std::pair<BasisKey, BasisKey>, Rat>;
using Tensor3 = std::map<std::array<BasisKey, 3>, Rat>;

void tensor_add(Tensor2& t, const BasisKey& a, const BasisKey& b, const Rat& coeff);

/// Tuple concatenation: disjoint generator union, word concatenation,
/// facet shift; canonicalized. Commutative and associative with unit 1.
BasisKey key_product(const BasisKey& a, const BasisKey& b,
                     int rank_bound = kCanonicalizationRankBound);
HopfVector hopf_product(const HopfVector& x, const HopfVector& y);

/// Sum over 2-flat-decompositions of restricted-tuple tensors, plus the
/// unit terms x(x)1 and 1(x)x from the dimension-0 splittings.
Tensor2 coproduct(const HopfVector& x);

Rat counit(const HopfVector& x);

/// Alternating sum over all flat decompositions (parts of dimension >= 1).
HopfVector takeuchi_antipode(const HopfVector& x);

/// Cancellation-free form: sum over canonical maximal-refinement
/// representatives K of (-1)^l(K) a(G..(K)) times the product tuple.
HopfVector antipode(const HopfVector& x);

/// Raw cancellation-free expansion of one key: one entry per Psi0 class,
/// before canonical keys merge. Used by the sign-coherence checks.
struct AntipodeClassTerm {
  FlatDecomposition parts;   // the Psi0 representative (sorted)
  Int orientation_count;     // a(Gbar)
  int sign;                  // (-1)^l
  BasisKey key;              // canonicalized product tuple
};
std::vector<AntipodeClassTerm> antipode_classes(const BasisKey& key);

/// Canonical maximal-refinement representative: the refined part multiset
/// sorted by (dimension, positions); fmap sends each sorted part to the
/// coarse part containing it.
FlatDecomposition psi0(const RootList& rl, const FlatDecomposition& d,
                       std::vector<int>* fmap = nullptr);

struct PartGraph {
  int vertex_count = 0;
  FlatDecomposition parts;                      // Psi0, sorted
  std::vector<int> f;                           // part -> coarse part index
  std::vector<std::pair<int, int>> directed;    // oriented by f
  std::vector<std::pair<int, int>> edges;       // underlying simple graph
};

PartGraph part_graph(const RootList& rl, const FlatDecomposition& d);

/// The unique permutation (peel order, largest source first) with
/// G(sigma Psi0) equal to the given acyclic orientation of the part graph.
std::vector<int> sigma_permutation(const PartGraph& base,
                                   const std::vector<std::pair<int, int>>& orientation);

/// Brute force over orientations up to 20 edges; deletion-contraction
/// |chi(-1)| beyond (the two agree; tests cross-check them).
Int count_acyclic_orientations(int vertices, const std::vector<std::pair<int, int>>& edges);

Int chromatic_polynomial_at(int vertices, std::vector<std::pair<int, int>> edges,
                            const Int& x);

struct BialgebraReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Coassociativity, cocommutativity, grading, counit laws, filtration
/// closure, and Delta(xy) = Delta(x)Delta(y) plus product associativity /
/// commutativity on pairs and triples within the rank bound.
BialgebraReport verify_bialgebra(const std::vector<BasisKey>& sample,
                                 int rank_bound = kCanonicalizationRankBound);

/// m o (pi_1 (x) pi_{n-1}) o Delta; zero below degree 2.
HopfVector top_to_random(const HopfVector& x);

bool is_gem(const BasisKey& key);

struct ChipTrajectory {
  std::vector<HopfVector> states;  // x, Tx, T^2 x, ...
  int stabilized_at = -1;          // first state whose support is all gems
};

ChipTrajectory chip_to_gems(const HopfVector& x, int max_iter);

}  // namespace swc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subword/numeric.hpp"

namespace swc {

/// A letter word: generator indices, 0-based internally (I/O is 1-based).
using Word = std::vector<int>;

/// Crystallographic Coxeter system. The Coxeter matrix stores m_ij with
/// infinity encoded as 0 and diagonal 2 (the on-disk convention as well).
/// The geometric action on the simple-root basis is s_i(v) = v - <row i of
/// cartan, v> e_i; group elements are the resulting integer matrices, and
/// matrix equality is element equality (the representation is faithful).
struct CoxeterSystem {
  int rank = 0;
  Eigen::MatrixXi coxeter;
  IMat cartan;
  QVec symmetrizer;           // positive diagonal d with diag(d)*cartan symmetric
  QMat bilinear;              // B = diag(d)*cartan
  std::vector<IMat> generators;
};

inline constexpr int kInfinity = 0;  // m_ij = infinity marker

/// Builds a system from a Coxeter matrix using the default Cartan table
/// m=2 -> (0,0), 3 -> (-1,-1), 4 -> (-1,-2), 6 -> (-1,-3), inf -> (-2,-2)
/// (the -1 on the row of the smaller index). A user Cartan overrides the
/// default and is validated against the Coxeter matrix.
CoxeterSystem build_system(const Eigen::MatrixXi& coxeter);
CoxeterSystem build_system(const Eigen::MatrixXi& coxeter, const IMat& cartan);

/// Derives the Coxeter matrix from Cartan entry products by the table
/// {0->2, 1->3, 2->4, 3->6, >=4->inf} and builds the system.
CoxeterSystem system_from_cartan(const IMat& cartan);

/// Named diagrams: "A3", "B4" (=C), "D4", affine "tA1"/"tA2".
Eigen::MatrixXi coxeter_matrix_of_type(const std::string& name);

/// Block-diagonal union; generators of the parts commute across parts.
Eigen::MatrixXi coxeter_product(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);

IVec simple_root(const CoxeterSystem& sys, int i);
IMat identity_element(const CoxeterSystem& sys);
const IMat& generator(const CoxeterSystem& sys, int i);

/// +1 for a positive root, -1 for a negative one; rejects zero or mixed
/// signs (the dichotomy every produced root must satisfy).
int root_sign(const IVec& root);

Int height(const IVec& root);

IVec act(const CoxeterSystem& sys, int i, const IVec& root);

/// Symmetrized bilinear form <a,b>.
Rat form(const CoxeterSystem& sys, const IVec& a, const IVec& b);

/// Cartan integer 2<beta,gamma>/<beta,beta>; integral for roots.
Int pairing(const CoxeterSystem& sys, const IVec& beta, const IVec& gamma);

/// Matrix of the reflection orthogonal to a root.
IMat reflection(const CoxeterSystem& sys, const IVec& root);

/// Product of generator matrices in word order. Asserts the product is
/// integrally invertible (its inverse is the reversed word).
IMat word_element(const CoxeterSystem& sys, const Word& word);

/// Length by greedy descent; terminates for any element of any system.
int element_length(const CoxeterSystem& sys, IMat g);

/// Inverse via the greedy descent word (integer entries).
IMat inverse_element(const CoxeterSystem& sys, IMat g);

bool is_reduced(const CoxeterSystem& sys, const Word& word);

/// inv(P): gamma_i = p_1...p_{i-1}(alpha_{p_i}); entries may repeat and may
/// be negative when the word is not reduced.
std::vector<IVec> inversions(const CoxeterSystem& sys, const Word& word);

/// Finite iff the bilinear form is positive definite.
bool is_finite(const CoxeterSystem& sys);

struct Finiteness {
  bool finite = false;
  std::optional<IMat> w0;
};
Finiteness finiteness_and_longest(const CoxeterSystem& sys);

bool is_root(const CoxeterSystem& sys, const IVec& v);

/// All positive roots of height <= h (finitely many in any rank).
std::vector<IVec> positive_roots_up_to_height(const CoxeterSystem& sys, const Int& h);

/// A root subsystem Phi' of the host system, given either as Phi cut by a
/// rational subspace or by an explicit simple system closed under its own
/// reflections.
class RootSubsystem {
 public:
  static RootSubsystem subspace(const CoxeterSystem& sys, const QMat& span_rows);
  static RootSubsystem span_of_roots(const CoxeterSystem& sys, const std::vector<IVec>& roots);
  static RootSubsystem explicit_simples(const CoxeterSystem& sys, std::vector<IVec> simples);

  bool contains(const IVec& root) const;

  /// Whether a positive root of Phi' is simple in Phi'. A non-simple root
  /// always has a witness gamma in Phi'+ of height <= its own with
  /// s_root(gamma) negative, so the bounded scan below is exact.
  bool is_simple(const IVec& root) const;

  const CoxeterSystem& host() const { return *host_; }

 private:
  const CoxeterSystem* host_ = nullptr;
  bool explicit_mode_ = false;
  QMat basis_;                 // subspace mode: RREF row basis
  std::vector<IVec> simples_;  // explicit mode
  std::optional<CoxeterSystem> sub_;  // explicit mode: abstract system on simples
};

struct RestrictedWord {
  Word word;                    // P' over the generators of W'
  CoxeterSystem system;         // W'
  std::vector<IVec> simples;    // discovered simple roots of Phi', host coords
  std::vector<int> kept;        // retained positions of P (0-based)
  std::vector<IVec> kept_roots; // the filtered inversion list
};

/// Filters inv(P) to the subsystem and reconstructs the word P' whose
/// inversion list is exactly the filtered list. Raises if any w^-1(gamma)
/// fails the simplicity test (that would falsify the restriction
/// proposition and must never happen).
RestrictedWord restrict_inversions(const CoxeterSystem& sys, const Word& p,
                                   const RootSubsystem& sub);

}  // namespace swc

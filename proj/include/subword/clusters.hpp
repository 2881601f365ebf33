#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subword/flats.hpp"

namespace swc {

/// Validates that c uses every generator exactly once.
void check_coxeter_element(const CoxeterSystem& sys, const Word& c);

/// The c-sorting word of w: greedy scan of c^infinity keeping a letter iff
/// it lengthens the running product, stopping at l(w).
Word sorting_word(const CoxeterSystem& sys, const Word& c, const IMat& w);

/// The case w = w0 (finite type only).
Word w0_sorting_word(const CoxeterSystem& sys, const Word& c);

struct ClusterInstance {
  SubwordInstance instance;  // Q = c w0(c), pi = w0
  Word c;
};

ClusterInstance cluster_instance(const CoxeterSystem& sys, const Word& c);

struct RotationResult {
  SubwordInstance instance;            // Q~ = (q2,...,qr, w0 q1 w0), pi = w0
  std::vector<int> position_map;       // old position -> new position
  std::optional<std::vector<int>> facet;
  std::optional<Flat> flat;
};

/// Rotation of a word with pi = w0. Asserts the facet-set isomorphism
/// between the two complexes under the position map; transports a facet
/// and a flat when given (a flat needs its facet).
RotationResult rotate(const SubwordInstance& inst,
                      const std::optional<std::vector<int>>& facet = std::nullopt,
                      const std::optional<Flat>& flat = std::nullopt);

/// The antisymmetric sorting form: omega(alpha_a, alpha_b) is +<a,b> when a
/// comes after b in c, -<a,b> when before, 0 on the diagonal.
QMat omega_form(const CoxeterSystem& sys, const Word& c);

Rat omega_value(const QMat& omega, const IVec& a, const IVec& b);

/// Whether a reduced word is the c-sorting word of its product up to
/// commutations: omega(beta_i, beta_j) >= 0 for i <= j on its inversion
/// sequence, strictly unless the reflections commute.
bool check_sorting(const CoxeterSystem& sys, const Word& c, const Word& word);

struct ClusterFlatReport {
  bool pass = true;
  std::string detail;
  Word c_f;  // extracted Coxeter element of W_F
};

/// Restricts a cluster instance to an irreducible flat and checks
/// Q_F = c_F w0(c_F) up to commutations, where c_F is the prefix of first
/// occurrences of the W_F generators in Q_F.
ClusterFlatReport verify_cluster_flat(const ClusterInstance& cluster,
                                      const std::vector<int>& facet, const Flat& flat);

using Diagonal = std::pair<int, int>;  // polygon vertices, 1-based, first < second

struct DiagonalMap {
  int gon = 0;                           // n + 3 vertices
  std::vector<Diagonal> by_position;     // one diagonal per letter of c w0(c)
  std::map<int, Diagonal> seed;          // generator -> seed (snake) diagonal
};

/// Type A only: positions of c w0(c) to diagonals of an (n+3)-gon via the
/// snake triangulation of c and counterclockwise rotation; facets map to
/// triangulations.
DiagonalMap typeA_diagonal_map(const ClusterInstance& cluster);

bool diagonals_cross(int gon, const Diagonal& a, const Diagonal& b);

}  // namespace swc

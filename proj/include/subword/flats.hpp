#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subword/subword.hpp"

namespace swc {

/// The full root list r_I(Q) of an instance at a facet. Flat operations all
/// run relative to one of these; it must not outlive its instance.
struct RootList {
  const SubwordInstance* instance = nullptr;
  std::vector<int> facet;
  std::vector<IVec> roots;
};

RootList root_list(const SubwordInstance& inst, std::vector<int> facet);

/// A flat of the root list: the positions whose roots lie in a subspace.
/// Identity is the position set; the basis is the RREF row basis of the
/// span of the member roots.
struct Flat {
  std::vector<int> positions;
  QMat basis;
  int dim = 0;

  bool operator==(const Flat& other) const { return positions == other.positions; }
};

/// Closure operator: the flat spanned by the roots at the seed positions.
Flat closure(const RootList& rl, const std::vector<int>& seed);

/// Builds the flat with exactly these positions; rejects non-closed sets.
Flat flat_at(const RootList& rl, const std::vector<int>& positions);

/// All flats, including the empty and the full one, sorted by
/// (dimension, positions).
std::vector<Flat> enumerate_flats(const RootList& rl);

/// span(flat) equals the span of the roots the facet contributes to it.
bool flat_irreducible(const RootList& rl, const Flat& flat);

bool flats_orthogonal(const RootList& rl, const Flat& a, const Flat& b);

/// Whether the non-orthogonality graph on the flat's roots is disconnected.
bool flat_splittable(const RootList& rl, const Flat& flat);

/// The restriction data (W_F, beta_F, Q_F, pi_F, I_F) carried by a flat.
struct RestrictedTuple {
  CoxeterSystem system;           // W_F, Cartan from the pairings of the betas
  std::vector<IVec> beta;         // beta_1..beta_r', host coordinates
  std::vector<IVec> simples;      // distinct beta values = generator roots
  Word word;                      // Q_F
  std::vector<int> facet;         // I_F
  Word pi_word;                   // complement of I_F in Q_F
  IMat pi;                        // pi_F
  std::vector<int> host_positions;  // j_1..j_r'
  std::vector<int> bar_facet;       // host positions of I_F
};

RestrictedTuple restrict_to_flat(const RootList& rl, const Flat& flat);

SubwordInstance restricted_instance(const RestrictedTuple& t);

struct DecompositionReport {
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

/// Checks root-function transport and the link isomorphism for one flat.
DecompositionReport verify_decomposition(const RootList& rl, const Flat& flat);

using FlatDecomposition = std::vector<Flat>;

/// Ordered tuples of irreducible flats of dimension >= 1 whose spans are
/// independent and sum to the whole space; `parts` selects one length,
/// nullopt returns them all. The instance must be irreducible at the facet.
std::vector<FlatDecomposition> flat_decompositions(const RootList& rl,
                                                   std::optional<int> parts);

/// Splits every part into the connected components of its
/// non-orthogonality graph; the components are flats and the refined part
/// multiset is unique.
FlatDecomposition maximal_refinement(const RootList& rl, const FlatDecomposition& d);

/// coarse <= fine: fine partitions consecutively into orthogonal groups
/// whose position unions are the coarse parts.
bool refinement_leq(const RootList& rl, const FlatDecomposition& coarse,
                    const FlatDecomposition& fine);

/// Irreducible, non-splittable flats of dimension >= 1: the possible parts
/// of maximal refinements.
std::vector<Flat> atom_flats(const RootList& rl);

}  // namespace swc

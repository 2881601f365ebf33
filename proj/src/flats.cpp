#include "subword/flats.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swc {

namespace {

QMat rows_of(const std::vector<IVec>& roots, const std::vector<int>& positions, int rank) {
  QMat rows(static_cast<Eigen::Index>(positions.size()), rank);
  for (size_t k = 0; k < positions.size(); ++k)
    rows.row(static_cast<Eigen::Index>(k)) =
        to_rat(roots[static_cast<size_t>(positions[k])]).transpose();
  return rows;
}

std::string positions_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
  os << "}";
  return os.str();
}

}  // namespace

RootList root_list(const SubwordInstance& inst, std::vector<int> facet) {
  RootList rl;
  rl.roots = root_function(inst, facet);
  rl.instance = &inst;
  rl.facet = std::move(facet);
  return rl;
}

Flat closure(const RootList& rl, const std::vector<int>& seed) {
  const int n = rl.instance->sys.rank;
  Flat flat;
  flat.basis = row_basis(rows_of(rl.roots, seed, n));
  flat.dim = static_cast<int>(flat.basis.rows());
  for (int p = 0; p < static_cast<int>(rl.roots.size()); ++p)
    if (in_row_span(flat.basis, to_rat(rl.roots[static_cast<size_t>(p)])))
      flat.positions.push_back(p);
  return flat;
}

Flat flat_at(const RootList& rl, const std::vector<int>& positions) {
  Flat flat = closure(rl, positions);
  if (flat.positions != positions)
    throw std::invalid_argument("position set is not closed (not a flat)");
  return flat;
}

std::vector<Flat> enumerate_flats(const RootList& rl) {
  const int n = rl.instance->sys.rank;
  // distinct directions are enough: a flat is the closure of <= n of them
  std::vector<int> reps;  // one position per direction
  std::vector<IVec> dirs;
  for (int p = 0; p < static_cast<int>(rl.roots.size()); ++p) {
    IVec d = rl.roots[static_cast<size_t>(p)];
    if (root_sign(d) < 0) d = -d;
    bool known = false;
    for (const IVec& e : dirs)
      if (e == d) {
        known = true;
        break;
      }
    if (!known) {
      dirs.push_back(std::move(d));
      reps.push_back(p);
    }
  }
  std::set<std::vector<int>> seen;
  std::vector<Flat> flats;
  auto add = [&](const std::vector<int>& seed) {
    Flat f = closure(rl, seed);
    if (seen.insert(f.positions).second) flats.push_back(std::move(f));
  };
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t from) -> void {
    add(pick);
    if (static_cast<int>(pick.size()) == n) return;
    for (size_t i = from; i < reps.size(); ++i) {
      pick.push_back(reps[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.positions < b.positions;
  });
  return flats;
}

bool flat_irreducible(const RootList& rl, const Flat& flat) {
  std::vector<int> facet_positions;
  for (const int p : flat.positions)
    if (std::binary_search(rl.facet.begin(), rl.facet.end(), p)) facet_positions.push_back(p);
  return rank_of(rows_of(rl.roots, facet_positions, rl.instance->sys.rank)) == flat.dim;
}

bool flats_orthogonal(const RootList& rl, const Flat& a, const Flat& b) {
  for (const int p : a.positions)
    for (const int q : b.positions)
      if (form(rl.instance->sys, rl.roots[static_cast<size_t>(p)],
               rl.roots[static_cast<size_t>(q)]) != 0)
        return false;
  return true;
}

namespace {

std::vector<std::vector<int>> orthogonality_components(const RootList& rl,
                                                       const std::vector<int>& positions) {
  const size_t m = positions.size();
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (size_t i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < m; ++v) {
        if (comp[v] >= 0) continue;
        if (form(rl.instance->sys, rl.roots[static_cast<size_t>(positions[u])],
                 rl.roots[static_cast<size_t>(positions[v])]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> parts(static_cast<size_t>(ncomp));
  for (size_t i = 0; i < m; ++i) parts[static_cast<size_t>(comp[i])].push_back(positions[i]);
  return parts;
}

}  // namespace

bool flat_splittable(const RootList& rl, const Flat& flat) {
  return orthogonality_components(rl, flat.positions).size() > 1;
}

RestrictedTuple restrict_to_flat(const RootList& rl, const Flat& flat) {
  const SubwordInstance& inst = *rl.instance;
  RestrictedTuple t;
  t.host_positions = flat.positions;
  const std::set<int> in_facet(rl.facet.begin(), rl.facet.end());
  const std::set<int> in_flat(flat.positions.begin(), flat.positions.end());
  IMat w = identity_element(inst.sys);
  for (int p = 0; p < static_cast<int>(inst.word.size()); ++p) {
    const int letter = inst.word[static_cast<size_t>(p)];
    if (in_flat.count(p)) {
      IVec beta = w.col(letter);
      if (root_sign(beta) < 0)
        throw std::logic_error("flat restriction produced a negative beta root");
      t.beta.push_back(std::move(beta));
    } else if (!in_facet.count(p)) {
      w = w * generator(inst.sys, letter);
    }
  }
  const RootSubsystem sub = RootSubsystem::subspace(inst.sys, flat.basis);
  for (size_t k = 0; k < t.beta.size(); ++k) {
    int letter = -1;
    for (size_t s = 0; s < t.simples.size(); ++s)
      if (t.simples[s] == t.beta[k]) {
        letter = static_cast<int>(s);
        break;
      }
    if (letter < 0) {
      if (!sub.is_simple(t.beta[k]))
        throw std::logic_error("beta root failed the simplicity test in Phi_F");
      letter = static_cast<int>(t.simples.size());
      t.simples.push_back(t.beta[k]);
    }
    t.word.push_back(letter);
  }
  const int r = static_cast<int>(t.simples.size());
  IMat cartan(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      cartan(a, b) = pairing(inst.sys, t.simples[static_cast<size_t>(a)],
                             t.simples[static_cast<size_t>(b)]);
      if (a != b && cartan(a, b) > 0)
        throw std::logic_error("beta simple roots are not pairwise non-acute");
    }
  t.system = system_from_cartan(cartan);
  for (size_t k = 0; k < flat.positions.size(); ++k) {
    if (in_facet.count(flat.positions[k])) {
      t.facet.push_back(static_cast<int>(k));
      t.bar_facet.push_back(flat.positions[k]);
    } else {
      t.pi_word.push_back(t.word[k]);
    }
  }
  t.pi = word_element(t.system, t.pi_word);
  return t;
}

SubwordInstance restricted_instance(const RestrictedTuple& t) {
  return make_instance(t.system, t.word, t.pi);
}

DecompositionReport verify_decomposition(const RootList& rl, const Flat& flat) {
  DecompositionReport report;
  const SubwordInstance& inst = *rl.instance;
  const RestrictedTuple t = restrict_to_flat(rl, flat);
  const SubwordInstance sub = restricted_instance(t);

  // (a) the flat is the root function of the restricted complex: r_F at
  // I_F equals r_I(j_k) rewritten over the beta simple roots
  const std::vector<IVec> sub_roots = root_function(sub, t.facet);
  QMat cols(inst.sys.rank, static_cast<Eigen::Index>(t.simples.size()));
  for (size_t s = 0; s < t.simples.size(); ++s)
    cols.col(static_cast<Eigen::Index>(s)) = to_rat(t.simples[s]);
  for (size_t k = 0; k < t.host_positions.size(); ++k) {
    const IVec& host_root = rl.roots[static_cast<size_t>(t.host_positions[k])];
    const auto x = solve_columns(cols, to_rat(host_root));
    if (!x) {
      report.pass = false;
      report.detail = "host root at position " + std::to_string(t.host_positions[k] + 1) +
                      " does not lie in the span of the beta roots";
      return report;
    }
    bool match = true;
    for (Eigen::Index s = 0; s < x->size(); ++s)
      if ((*x)(s) != Rat(sub_roots[k](s))) match = false;
    if (!match) {
      report.pass = false;
      report.detail = "root transport mismatch at flat index " + std::to_string(k + 1);
      return report;
    }
  }

  // (b) the restricted complex is the link of I minus bar(I_F)
  std::vector<int> deleted;
  for (const int p : rl.facet)
    if (!std::binary_search(t.bar_facet.begin(), t.bar_facet.end(), p)) deleted.push_back(p);
  const LinkInstance link = link_instance(inst, deleted);
  std::set<std::vector<int>> link_facets;
  for (const auto& f : enumerate_facets(link.instance).facets) {
    std::vector<int> host;
    for (const int p : f) host.push_back(link.old_of_new[static_cast<size_t>(p)]);
    std::sort(host.begin(), host.end());
    link_facets.insert(host);
  }
  std::set<std::vector<int>> transported;
  for (const auto& f : enumerate_facets(sub).facets) {
    std::vector<int> host;
    for (const int k : f) host.push_back(t.host_positions[static_cast<size_t>(k)]);
    std::sort(host.begin(), host.end());
    transported.insert(host);
  }
  if (link_facets != transported) {
    report.pass = false;
    std::ostringstream os;
    os << "link facet sets differ: link has " << link_facets.size() << ", restriction has "
       << transported.size() << " (flat " << positions_str(flat.positions) << ")";
    report.detail = os.str();
  }
  return report;
}

std::vector<FlatDecomposition> flat_decompositions(const RootList& rl,
                                                   std::optional<int> parts) {
  const SubwordInstance& inst = *rl.instance;
  if (!is_irreducible(inst, rl.facet))
    throw std::invalid_argument(
        "flat decompositions require an irreducible instance; restrict to the span of the "
        "root configuration first");
  const int n = inst.sys.rank;
  std::vector<Flat> inventory;
  for (Flat& f : enumerate_flats(rl))
    if (f.dim >= 1 && flat_irreducible(rl, f)) inventory.push_back(std::move(f));
  std::vector<FlatDecomposition> out;
  if (parts && (*parts < 1 || *parts > n)) return out;
  FlatDecomposition current;
  std::vector<bool> used(inventory.size(), false);
  auto rec = [&](auto&& self, const QMat& span, int dim) -> void {
    if (dim == n) {
      if (!parts || static_cast<int>(current.size()) == *parts) out.push_back(current);
      return;
    }
    if (parts && static_cast<int>(current.size()) >= *parts) return;
    for (size_t i = 0; i < inventory.size(); ++i) {
      if (used[i] || inventory[i].dim + dim > n) continue;
      QMat stacked(span.rows() + inventory[i].basis.rows(), n);
      stacked.topRows(span.rows()) = span;
      stacked.bottomRows(inventory[i].basis.rows()) = inventory[i].basis;
      if (rank_of(stacked) != dim + inventory[i].dim) continue;
      used[i] = true;
      current.push_back(inventory[i]);
      self(self, stacked, dim + inventory[i].dim);
      current.pop_back();
      used[i] = false;
    }
  };
  rec(rec, QMat(0, n), 0);
  std::sort(out.begin(), out.end(), [](const FlatDecomposition& a, const FlatDecomposition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].positions != b[i].positions) return a[i].positions < b[i].positions;
    return false;
  });
  return out;
}

FlatDecomposition maximal_refinement(const RootList& rl, const FlatDecomposition& d) {
  FlatDecomposition refined;
  for (const Flat& part : d) {
    std::vector<Flat> pieces;
    for (const auto& component : orthogonality_components(rl, part.positions)) {
      Flat piece = closure(rl, component);
      if (piece.positions != component)
        throw std::logic_error("orthogonality component of a flat is not closed");
      pieces.push_back(std::move(piece));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Flat& a, const Flat& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      return a.positions < b.positions;
    });
    for (Flat& piece : pieces) refined.push_back(std::move(piece));
  }
  return refined;
}

bool refinement_leq(const RootList& rl, const FlatDecomposition& coarse,
                    const FlatDecomposition& fine) {
  size_t next = 0;
  for (const Flat& part : coarse) {
    std::set<int> want(part.positions.begin(), part.positions.end());
    std::set<int> got;
    std::vector<size_t> group;
    while (got != want) {
      if (next >= fine.size()) return false;
      for (const int p : fine[next].positions) {
        if (!want.count(p)) return false;
        got.insert(p);
      }
      group.push_back(next);
      ++next;
    }
    for (size_t a = 0; a < group.size(); ++a)
      for (size_t b = a + 1; b < group.size(); ++b)
        if (!flats_orthogonal(rl, fine[group[a]], fine[group[b]])) return false;
  }
  return next == fine.size();
}

std::vector<Flat> atom_flats(const RootList& rl) {
  std::vector<Flat> atoms;
  for (Flat& f : enumerate_flats(rl))
    if (f.dim >= 1 && flat_irreducible(rl, f) && !flat_splittable(rl, f))
      atoms.push_back(std::move(f));
  return atoms;
}

}  // namespace swc

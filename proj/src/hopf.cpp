#include "subword/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swc {

namespace {

bool matrix_less(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

bool matrix_equal(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace

int BasisKey::max_finite_m() const {
  int m = 2;
  for (Eigen::Index i = 0; i < coxeter.rows(); ++i)
    for (Eigen::Index j = i + 1; j < coxeter.cols(); ++j)
      if (coxeter(i, j) != kInfinity) m = std::max(m, coxeter(i, j));
  return m;
}

bool BasisKey::operator==(const BasisKey& other) const {
  return matrix_equal(coxeter, other.coxeter) && word == other.word && facet == other.facet;
}

bool BasisKey::operator<(const BasisKey& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  if (!matrix_equal(coxeter, other.coxeter)) return matrix_less(coxeter, other.coxeter);
  if (word != other.word) return word < other.word;
  return facet < other.facet;
}

BasisKey unit_key() {
  BasisKey key;
  key.coxeter = Eigen::MatrixXi(0, 0);
  return key;
}

std::pair<Word, std::vector<int>> commutation_normal_form(const Word& word,
                                                          const Eigen::MatrixXi& coxeter) {
  const size_t len = word.size();
  std::vector<bool> emitted(len, false);
  Word out;
  std::vector<int> perm;
  out.reserve(len);
  perm.reserve(len);
  auto commute = [&](int a, int b) { return a != b && coxeter(a, b) == 2; };
  for (size_t step = 0; step < len; ++step) {
    int best = -1;
    for (size_t p = 0; p < len; ++p) {
      if (emitted[p]) continue;
      bool available = true;
      for (size_t q = 0; q < p && available; ++q)
        if (!emitted[q] && !commute(word[q], word[p])) available = false;
      if (available && (best < 0 || word[p] < word[static_cast<size_t>(best)]))
        best = static_cast<int>(p);
    }
    if (best < 0) throw std::logic_error("commutation normal form: no available letter");
    emitted[static_cast<size_t>(best)] = true;
    out.push_back(word[static_cast<size_t>(best)]);
    perm.push_back(best);
  }
  return {out, perm};
}

namespace {

BasisKey raw_canonical_form(const Eigen::MatrixXi& coxeter, const Word& word,
                            const std::vector<int>& facet, int rank_bound) {
  const int n = static_cast<int>(coxeter.rows());
  if (n > rank_bound) {
    std::ostringstream os;
    os << "canonicalization bound exceeded: rank " << n << " > " << rank_bound;
    throw std::invalid_argument(os.str());
  }
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::optional<BasisKey> best;
  Eigen::MatrixXi relabeled(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relabeled(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]) = coxeter(i, j);
    if (best && matrix_less(best->coxeter, relabeled)) continue;
    Word mapped(word.size());
    for (size_t p = 0; p < word.size(); ++p)
      mapped[p] = sigma[static_cast<size_t>(word[p])];
    auto [normal, perm] = commutation_normal_form(mapped, relabeled);
    const std::set<int> in_facet(facet.begin(), facet.end());
    std::vector<int> moved;
    for (size_t new_pos = 0; new_pos < perm.size(); ++new_pos)
      if (in_facet.count(perm[new_pos])) moved.push_back(static_cast<int>(new_pos));
    BasisKey candidate;
    candidate.coxeter = relabeled;
    candidate.word = std::move(normal);
    candidate.facet = std::move(moved);
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (!best) throw std::logic_error("canonicalization found no candidate");
  return *best;
}

}  // namespace

BasisKey canonicalize(const SubwordInstance& inst, const std::vector<int>& facet,
                      int rank_bound) {
  if (!is_facet(inst, facet))
    throw std::invalid_argument("canonicalize: positions are not a facet");
  if (!is_irreducible(inst, facet))
    throw std::invalid_argument("canonicalize: instance is reducible at this facet");
  return raw_canonical_form(inst.sys.coxeter, inst.word, facet, rank_bound);
}

BasisKey canonicalize(const RestrictedTuple& tuple, int rank_bound) {
  return canonicalize(restricted_instance(tuple), tuple.facet, rank_bound);
}

SubwordInstance key_instance(const BasisKey& key) {
  CoxeterSystem sys = build_system(key.coxeter);
  Word pi_word = complement_word(key.word, key.facet);
  return make_instance(std::move(sys), key.word, pi_word);
}

Word complement_word(const Word& word, const std::vector<int>& facet) {
  Word out;
  const std::set<int> in_facet(facet.begin(), facet.end());
  for (int p = 0; p < static_cast<int>(word.size()); ++p)
    if (!in_facet.count(p)) out.push_back(word[static_cast<size_t>(p)]);
  return out;
}

void HopfVector::add(const BasisKey& key, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

HopfVector& HopfVector::operator+=(const HopfVector& other) {
  for (const auto& [key, coeff] : other.terms) add(key, coeff);
  return *this;
}

HopfVector& HopfVector::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms) coeff *= scalar;
  return *this;
}

HopfVector hopf_unit() { return single(unit_key()); }

HopfVector single(const BasisKey& key, const Rat& coeff) {
  HopfVector v;
  v.add(key, coeff);
  return v;
}

void tensor_add(Tensor2& t, const BasisKey& a, const BasisKey& b, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = t.find({a, b});
  if (it == t.end()) {
    t.emplace(std::make_pair(a, b), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) t.erase(it);
}

BasisKey key_product(const BasisKey& a, const BasisKey& b, int rank_bound) {
  if (a.degree() == 0) return b;
  if (b.degree() == 0) return a;
  const Eigen::MatrixXi m = coxeter_product(a.coxeter, b.coxeter);
  Word word = a.word;
  for (const int letter : b.word) word.push_back(letter + a.degree());
  std::vector<int> facet = a.facet;
  for (const int p : b.facet) facet.push_back(p + a.word_length());
  return raw_canonical_form(m, word, facet, rank_bound);
}

HopfVector hopf_product(const HopfVector& x, const HopfVector& y) {
  HopfVector out;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) out.add(key_product(ka, kb), ca * cb);
  return out;
}

namespace {

/// Keys of the restricted tuples of the parts, memoized per flat.
class RestrictionKeys {
 public:
  explicit RestrictionKeys(const RootList& rl) : rl_(rl) {}

  const BasisKey& key_of(const Flat& flat) {
    auto it = cache_.find(flat.positions);
    if (it != cache_.end()) return it->second;
    BasisKey key = canonicalize(restrict_to_flat(rl_, flat), kCanonicalizationRankBound);
    return cache_.emplace(flat.positions, std::move(key)).first->second;
  }

  const BasisKey& product_of(const FlatDecomposition& parts) {
    std::vector<std::vector<int>> id;
    for (const Flat& f : parts) id.push_back(f.positions);
    auto it = products_.find(id);
    if (it != products_.end()) return it->second;
    BasisKey key = unit_key();
    for (const Flat& f : parts) key = key_product(key, key_of(f));
    return products_.emplace(std::move(id), std::move(key)).first->second;
  }

 private:
  const RootList& rl_;
  std::map<std::vector<int>, BasisKey> cache_;
  std::map<std::vector<std::vector<int>>, BasisKey> products_;
};

}  // namespace

Tensor2 coproduct(const HopfVector& x) {
  Tensor2 out;
  for (const auto& [key, coeff] : x.terms) {
    if (key.degree() == 0) {
      tensor_add(out, unit_key(), unit_key(), coeff);
      continue;
    }
    tensor_add(out, key, unit_key(), coeff);
    tensor_add(out, unit_key(), key, coeff);
    const SubwordInstance inst = key_instance(key);
    const RootList rl = root_list(inst, key.facet);
    RestrictionKeys keys(rl);
    for (const FlatDecomposition& d : flat_decompositions(rl, 2))
      tensor_add(out, keys.key_of(d[0]), keys.key_of(d[1]), coeff);
  }
  return out;
}

Rat counit(const HopfVector& x) {
  const auto it = x.terms.find(unit_key());
  return it == x.terms.end() ? Rat(0) : it->second;
}

HopfVector takeuchi_antipode(const HopfVector& x) {
  HopfVector out;
  for (const auto& [key, coeff] : x.terms) {
    if (key.degree() == 0) {
      out.add(key, coeff);
      continue;
    }
    const SubwordInstance inst = key_instance(key);
    const RootList rl = root_list(inst, key.facet);
    RestrictionKeys keys(rl);
    for (const FlatDecomposition& d : flat_decompositions(rl, std::nullopt)) {
      const Rat sign = (d.size() % 2 == 0) ? Rat(1) : Rat(-1);
      out.add(keys.product_of(d), sign * coeff);
    }
  }
  return out;
}

std::vector<AntipodeClassTerm> antipode_classes(const BasisKey& key) {
  std::vector<AntipodeClassTerm> out;
  if (key.degree() == 0) return out;
  const SubwordInstance inst = key_instance(key);
  const RootList rl = root_list(inst, key.facet);
  RestrictionKeys keys(rl);
  const std::vector<Flat> atoms = atom_flats(rl);  // sorted by (dim, positions)
  const int n = inst.sys.rank;
  FlatDecomposition current;
  auto rec = [&](auto&& self, size_t from, const QMat& span, int dim) -> void {
    if (dim == n) {
      AntipodeClassTerm term;
      term.parts = current;
      std::vector<std::pair<int, int>> edges;
      for (size_t i = 0; i < current.size(); ++i)
        for (size_t j = i + 1; j < current.size(); ++j)
          if (!flats_orthogonal(rl, current[i], current[j]))
            edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      term.orientation_count =
          count_acyclic_orientations(static_cast<int>(current.size()), edges);
      term.sign = current.size() % 2 == 0 ? 1 : -1;
      term.key = keys.product_of(current);
      out.push_back(std::move(term));
      return;
    }
    for (size_t i = from; i < atoms.size(); ++i) {
      if (atoms[i].dim + dim > n) continue;
      QMat stacked(span.rows() + atoms[i].basis.rows(), n);
      stacked.topRows(span.rows()) = span;
      stacked.bottomRows(atoms[i].basis.rows()) = atoms[i].basis;
      if (rank_of(stacked) != dim + atoms[i].dim) continue;
      current.push_back(atoms[i]);
      self(self, i + 1, stacked, dim + atoms[i].dim);
      current.pop_back();
    }
  };
  rec(rec, 0, QMat(0, n), 0);
  return out;
}

HopfVector antipode(const HopfVector& x) {
  HopfVector out;
  for (const auto& [key, coeff] : x.terms) {
    if (key.degree() == 0) {
      out.add(key, coeff);
      continue;
    }
    for (const AntipodeClassTerm& term : antipode_classes(key))
      out.add(term.key, coeff * Rat(term.sign) * Rat(term.orientation_count));
  }
  return out;
}

FlatDecomposition psi0(const RootList& rl, const FlatDecomposition& d,
                       std::vector<int>* fmap) {
  FlatDecomposition refined = maximal_refinement(rl, d);
  std::sort(refined.begin(), refined.end(), [](const Flat& a, const Flat& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.positions < b.positions;
  });
  if (fmap) {
    fmap->clear();
    for (const Flat& piece : refined) {
      int owner = -1;
      for (size_t c = 0; c < d.size(); ++c) {
        if (std::includes(d[c].positions.begin(), d[c].positions.end(),
                          piece.positions.begin(), piece.positions.end())) {
          owner = static_cast<int>(c);
          break;
        }
      }
      if (owner < 0) throw std::logic_error("psi0 piece not contained in any coarse part");
      fmap->push_back(owner);
    }
  }
  return refined;
}

PartGraph part_graph(const RootList& rl, const FlatDecomposition& d) {
  PartGraph g;
  g.parts = psi0(rl, d, &g.f);
  g.vertex_count = static_cast<int>(g.parts.size());
  for (int i = 0; i < g.vertex_count; ++i) {
    for (int j = i + 1; j < g.vertex_count; ++j) {
      if (flats_orthogonal(rl, g.parts[static_cast<size_t>(i)], g.parts[static_cast<size_t>(j)]))
        continue;
      g.edges.emplace_back(i, j);
      if (g.f[static_cast<size_t>(i)] == g.f[static_cast<size_t>(j)])
        throw std::logic_error("non-orthogonal refinement pieces share a coarse part");
      if (g.f[static_cast<size_t>(i)] < g.f[static_cast<size_t>(j)])
        g.directed.emplace_back(i, j);
      else
        g.directed.emplace_back(j, i);
    }
  }
  return g;
}

std::vector<int> sigma_permutation(const PartGraph& base,
                                   const std::vector<std::pair<int, int>>& orientation) {
  const int n = base.vertex_count;
  {
    std::set<std::pair<int, int>> undirected;
    for (const auto& [a, b] : orientation)
      undirected.emplace(std::min(a, b), std::max(a, b));
    std::set<std::pair<int, int>> expected(base.edges.begin(), base.edges.end());
    if (undirected != expected)
      throw std::invalid_argument("orientation does not match the part graph");
  }
  std::vector<bool> removed(static_cast<size_t>(n), false);
  std::vector<int> sigma;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<size_t>(v)]) continue;
      bool source = true;
      for (const auto& [a, b] : orientation)
        if (b == v && !removed[static_cast<size_t>(a)]) source = false;
      if (source) pick = v;  // keep the largest source
    }
    if (pick < 0) throw std::invalid_argument("orientation is not acyclic");
    sigma.push_back(pick);
    removed[static_cast<size_t>(pick)] = true;
  }
  // postcondition G(sigma Psi0) = G: the peel order is a linear extension
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
  for (const auto& [a, b] : base.edges) {
    const bool forward = order[static_cast<size_t>(a)] < order[static_cast<size_t>(b)];
    const auto expected = forward ? std::make_pair(a, b) : std::make_pair(b, a);
    if (std::find(orientation.begin(), orientation.end(), expected) == orientation.end())
      throw std::logic_error("sigma permutation postcondition failed");
  }
  return sigma;
}

Int count_acyclic_orientations(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const size_t m = edges.size();
  if (m > 20) {
    Int value = chromatic_polynomial_at(vertices, edges, Int(-1));
    return value < 0 ? Int(-value) : value;
  }
  Int count = 0;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertices));
    for (size_t e = 0; e < m; ++e) {
      const auto [a, b] = edges[e];
      if (mask & (1ul << e))
        adj[static_cast<size_t>(a)].push_back(b);
      else
        adj[static_cast<size_t>(b)].push_back(a);
    }
    // cycle check by coloring
    std::vector<int> state(static_cast<size_t>(vertices), 0);
    bool acyclic = true;
    auto dfs = [&](auto&& self, int v) -> bool {
      state[static_cast<size_t>(v)] = 1;
      for (const int w : adj[static_cast<size_t>(v)]) {
        if (state[static_cast<size_t>(w)] == 1) return false;
        if (state[static_cast<size_t>(w)] == 0 && !self(self, w)) return false;
      }
      state[static_cast<size_t>(v)] = 2;
      return true;
    };
    for (int v = 0; v < vertices && acyclic; ++v)
      if (state[static_cast<size_t>(v)] == 0 && !dfs(dfs, v)) acyclic = false;
    if (acyclic) ++count;
  }
  return count;
}

Int chromatic_polynomial_at(int vertices, std::vector<std::pair<int, int>> edges,
                            const Int& x) {
  if (edges.empty()) {
    Int value = 1;
    for (int i = 0; i < vertices; ++i) value *= x;
    return value;
  }
  const auto [a, b] = edges.back();
  edges.pop_back();
  const Int deleted = chromatic_polynomial_at(vertices, edges, x);
  // contract b into a, dropping loops and duplicate edges
  std::set<std::pair<int, int>> contracted;
  for (auto [u, v] : edges) {
    if (u == b) u = a;
    if (v == b) v = a;
    if (u > b) --u;
    if (v > b) --v;
    if (u == v) continue;
    contracted.emplace(std::min(u, v), std::max(u, v));
  }
  const Int merged = chromatic_polynomial_at(
      vertices - 1, std::vector<std::pair<int, int>>(contracted.begin(), contracted.end()), x);
  return deleted - merged;
}

namespace {

int max_finite_m_value(const BasisKey& key) { return key.max_finite_m(); }

Tensor3 delta_left(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [pair, coeff] : t) {
    const Tensor2 inner = coproduct(single(pair.first));
    for (const auto& [ip, icoeff] : inner) {
      const std::array<BasisKey, 3> key{ip.first, ip.second, pair.second};
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, coeff * icoeff);
      else {
        it->second += coeff * icoeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Tensor3 delta_right(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [pair, coeff] : t) {
    const Tensor2 inner = coproduct(single(pair.second));
    for (const auto& [ip, icoeff] : inner) {
      const std::array<BasisKey, 3> key{pair.first, ip.first, ip.second};
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, coeff * icoeff);
      else {
        it->second += coeff * icoeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Tensor2 tensor_product(const Tensor2& x, const Tensor2& y) {
  Tensor2 out;
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y)
      tensor_add(out, key_product(px.first, py.first), key_product(px.second, py.second),
                 cx * cy);
  return out;
}

}  // namespace

BialgebraReport verify_bialgebra(const std::vector<BasisKey>& sample, int rank_bound) {
  BialgebraReport report;
  auto fail = [&](const std::string& what) {
    report.pass = false;
    report.failures.push_back(what);
  };
  for (size_t idx = 0; idx < sample.size(); ++idx) {
    const BasisKey& x = sample[idx];
    const std::string name = "key#" + std::to_string(idx + 1);
    const Tensor2 dx = coproduct(single(x));
    // grading and filtration
    for (const auto& [pair, coeff] : dx) {
      (void)coeff;
      if (pair.first.degree() + pair.second.degree() != x.degree())
        fail(name + ": coproduct term degrees do not add up");
      if (pair.first.word_length() + pair.second.word_length() > x.word_length())
        fail(name + ": coproduct term word lengths exceed the parent");
      if (std::max(max_finite_m_value(pair.first), max_finite_m_value(pair.second)) >
          std::max(x.max_finite_m(), 2))
        fail(name + ": coproduct term leaves the m-filtration");
    }
    // cocommutativity
    for (const auto& [pair, coeff] : dx) {
      const auto it = dx.find({pair.second, pair.first});
      if (it == dx.end() || it->second != coeff) {
        fail(name + ": coproduct is not cocommutative");
        break;
      }
    }
    // counit laws
    {
      HopfVector left, right;
      for (const auto& [pair, coeff] : dx) {
        if (pair.first.degree() == 0) left.add(pair.second, coeff);
        if (pair.second.degree() == 0) right.add(pair.first, coeff);
      }
      if (!(left == single(x)) || !(right == single(x)))
        fail(name + ": counit law fails");
    }
    // coassociativity
    if (delta_left(dx) != delta_right(dx)) fail(name + ": coproduct is not coassociative");
  }
  for (size_t i = 0; i < sample.size(); ++i) {
    for (size_t j = i; j < sample.size(); ++j) {
      const BasisKey& x = sample[i];
      const BasisKey& y = sample[j];
      if (x.degree() + y.degree() > rank_bound) continue;
      const std::string name =
          "pair#" + std::to_string(i + 1) + "," + std::to_string(j + 1);
      const BasisKey xy = key_product(x, y);
      if (!(xy == key_product(y, x))) fail(name + ": product is not commutative");
      if (xy.degree() != x.degree() + y.degree() ||
          xy.word_length() != x.word_length() + y.word_length() ||
          xy.max_finite_m() != std::max(x.max_finite_m(), y.max_finite_m()))
        fail(name + ": product filtration violated");
      const Tensor2 lhs = coproduct(single(xy));
      const Tensor2 rhs = tensor_product(coproduct(single(x)), coproduct(single(y)));
      if (lhs != rhs) fail(name + ": Delta(xy) != Delta(x)Delta(y)");
    }
  }
  for (size_t i = 0; i < sample.size(); ++i)
    for (size_t j = i; j < sample.size(); ++j)
      for (size_t k = j; k < sample.size(); ++k) {
        const BasisKey &x = sample[i], &y = sample[j], &z = sample[k];
        if (x.degree() + y.degree() + z.degree() > rank_bound) continue;
        if (!(key_product(key_product(x, y), z) == key_product(x, key_product(y, z))))
          fail("triple#" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               std::to_string(k + 1) + ": product is not associative");
      }
  return report;
}

HopfVector top_to_random(const HopfVector& x) {
  HopfVector out;
  for (const auto& [key, coeff] : x.terms) {
    if (key.degree() < 2) continue;
    const SubwordInstance inst = key_instance(key);
    const RootList rl = root_list(inst, key.facet);
    RestrictionKeys keys(rl);
    for (const FlatDecomposition& d : flat_decompositions(rl, 2)) {
      if (d[0].dim != 1) continue;
      out.add(key_product(keys.key_of(d[0]), keys.key_of(d[1])), coeff);
    }
  }
  return out;
}

bool is_gem(const BasisKey& key) {
  for (Eigen::Index i = 0; i < key.coxeter.rows(); ++i)
    for (Eigen::Index j = i + 1; j < key.coxeter.cols(); ++j)
      if (key.coxeter(i, j) != 2) return false;
  return true;
}

ChipTrajectory chip_to_gems(const HopfVector& x, int max_iter) {
  ChipTrajectory trajectory;
  trajectory.states.push_back(x);
  auto all_gems = [](const HopfVector& v) {
    for (const auto& [key, coeff] : v.terms) {
      (void)coeff;
      if (!is_gem(key)) return false;
    }
    return true;
  };
  for (int iter = 0; iter <= max_iter; ++iter) {
    if (all_gems(trajectory.states.back())) {
      trajectory.stabilized_at = iter;
      return trajectory;
    }
    if (iter == max_iter) break;
    trajectory.states.push_back(top_to_random(trajectory.states.back()));
  }
  return trajectory;
}

}  // namespace swc

#include "subword/clusters.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "subword/hopf.hpp"

namespace swc {

void check_coxeter_element(const CoxeterSystem& sys, const Word& c) {
  if (static_cast<int>(c.size()) != sys.rank)
    throw std::invalid_argument("coxeter element word must use every generator once");
  std::vector<bool> seen(static_cast<size_t>(sys.rank), false);
  for (const int letter : c) {
    if (letter < 0 || letter >= sys.rank || seen[static_cast<size_t>(letter)])
      throw std::invalid_argument("coxeter element word must use every generator once");
    seen[static_cast<size_t>(letter)] = true;
  }
}

Word sorting_word(const CoxeterSystem& sys, const Word& c, const IMat& w) {
  check_coxeter_element(sys, c);
  const int target = element_length(sys, w);
  Word out;
  IMat u_inv = inverse_element(sys, w);
  int taken = 0;
  while (taken < target) {
    bool progressed = false;
    for (const int letter : c) {
      if (taken == target) break;
      if (root_sign(u_inv.col(letter)) < 0) {
        u_inv = u_inv * generator(sys, letter);
        out.push_back(letter);
        ++taken;
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("sorting word scan made no progress");
  }
  return out;
}

Word w0_sorting_word(const CoxeterSystem& sys, const Word& c) {
  const Finiteness fin = finiteness_and_longest(sys);
  if (!fin.finite)
    throw std::invalid_argument("w0 sorting word requires a finite-type system");
  return sorting_word(sys, c, *fin.w0);
}

ClusterInstance cluster_instance(const CoxeterSystem& sys, const Word& c) {
  const Finiteness fin = finiteness_and_longest(sys);
  if (!fin.finite) throw std::invalid_argument("cluster instances require finite type");
  Word q = c;
  const Word tail = sorting_word(sys, c, *fin.w0);
  q.insert(q.end(), tail.begin(), tail.end());
  ClusterInstance cluster;
  cluster.instance = make_instance(sys, std::move(q), *fin.w0);
  cluster.c = c;
  return cluster;
}

RotationResult rotate(const SubwordInstance& inst,
                      const std::optional<std::vector<int>>& facet,
                      const std::optional<Flat>& flat) {
  const Finiteness fin = finiteness_and_longest(inst.sys);
  if (!fin.finite || inst.pi != *fin.w0)
    throw std::invalid_argument("rotation requires pi = w0 in finite type");
  const int r = static_cast<int>(inst.word.size());
  if (r == 0) throw std::invalid_argument("rotation of an empty word");
  const int first = inst.word.front();
  // w0 s w0 is the generator whose simple root is -w0(alpha_s)
  const IVec image = inst.pi.col(first);
  int conjugate = -1;
  for (int j = 0; j < inst.sys.rank; ++j)
    if (image == IVec(-simple_root(inst.sys, j))) conjugate = j;
  if (conjugate < 0) throw std::logic_error("w0 conjugate of a generator not found");
  Word rotated(inst.word.begin() + 1, inst.word.end());
  rotated.push_back(conjugate);

  RotationResult result;
  result.instance = make_instance(inst.sys, std::move(rotated), inst.pi);
  result.position_map.resize(static_cast<size_t>(r));
  result.position_map[0] = r - 1;
  for (int p = 1; p < r; ++p) result.position_map[static_cast<size_t>(p)] = p - 1;

  const auto before = enumerate_facets(inst);
  const auto after = enumerate_facets(result.instance);
  std::set<std::vector<int>> mapped;
  for (const auto& f : before.facets) {
    std::vector<int> g;
    for (const int p : f) g.push_back(result.position_map[static_cast<size_t>(p)]);
    std::sort(g.begin(), g.end());
    mapped.insert(g);
  }
  if (mapped != std::set<std::vector<int>>(after.facets.begin(), after.facets.end()))
    throw std::logic_error("rotation does not map facets onto facets");

  if (facet) {
    std::vector<int> g;
    for (const int p : *facet) g.push_back(result.position_map[static_cast<size_t>(p)]);
    std::sort(g.begin(), g.end());
    result.facet = std::move(g);
  }
  if (flat) {
    if (!facet) throw std::invalid_argument("rotating a flat needs its facet");
    std::vector<int> j;
    for (const int p : flat->positions) j.push_back(result.position_map[static_cast<size_t>(p)]);
    std::sort(j.begin(), j.end());
    const RootList rl = root_list(result.instance, *result.facet);
    result.flat = flat_at(rl, j);  // throws if rotation broke closedness
  }
  return result;
}

QMat omega_form(const CoxeterSystem& sys, const Word& c) {
  check_coxeter_element(sys, c);
  std::vector<int> pos(static_cast<size_t>(sys.rank));
  for (int k = 0; k < sys.rank; ++k) pos[static_cast<size_t>(c[static_cast<size_t>(k)])] = k;
  QMat omega = QMat::Zero(sys.rank, sys.rank);
  for (int a = 0; a < sys.rank; ++a)
    for (int b = 0; b < sys.rank; ++b) {
      if (pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)])
        omega(a, b) = sys.bilinear(a, b);
      else if (pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)])
        omega(a, b) = -sys.bilinear(a, b);
    }
  return omega;
}

Rat omega_value(const QMat& omega, const IVec& a, const IVec& b) {
  Rat total = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0) continue;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      if (b(j) != 0) total += Rat(a(i)) * omega(i, j) * Rat(b(j));
  }
  return total;
}

bool check_sorting(const CoxeterSystem& sys, const Word& c, const Word& word) {
  if (!is_reduced(sys, word))
    throw std::invalid_argument("check_sorting requires a reduced word");
  const QMat omega = omega_form(sys, c);
  const std::vector<IVec> beta = inversions(sys, word);
  for (size_t i = 0; i < beta.size(); ++i)
    for (size_t j = i + 1; j < beta.size(); ++j) {
      const Rat value = omega_value(omega, beta[i], beta[j]);
      if (value < 0) return false;
      if (value == 0 && form(sys, beta[i], beta[j]) != 0) return false;
    }
  return true;
}

ClusterFlatReport verify_cluster_flat(const ClusterInstance& cluster,
                                      const std::vector<int>& facet, const Flat& flat) {
  ClusterFlatReport report;
  const RootList rl = root_list(cluster.instance, facet);
  if (!flat_irreducible(rl, flat))
    throw std::invalid_argument("verify_cluster_flat needs an irreducible flat");
  const RestrictedTuple t = restrict_to_flat(rl, flat);
  const Finiteness fin = finiteness_and_longest(t.system);
  if (!fin.finite) {
    report.pass = false;
    report.detail = "restricted system is not of finite type";
    return report;
  }
  if (t.pi != *fin.w0) {
    report.pass = false;
    report.detail = "pi_F is not the longest element of W_F";
    return report;
  }
  std::vector<bool> seen(static_cast<size_t>(t.system.rank), false);
  for (const int letter : t.word) {
    if (!seen[static_cast<size_t>(letter)]) {
      seen[static_cast<size_t>(letter)] = true;
      report.c_f.push_back(letter);
    }
  }
  Word rebuilt = report.c_f;
  const Word tail = sorting_word(t.system, report.c_f, *fin.w0);
  rebuilt.insert(rebuilt.end(), tail.begin(), tail.end());
  const Word lhs = commutation_normal_form(t.word, t.system.coxeter).first;
  const Word rhs = commutation_normal_form(rebuilt, t.system.coxeter).first;
  if (lhs != rhs) {
    report.pass = false;
    std::ostringstream os;
    os << "Q_F is not c_F w0(c_F) up to commutations (flat {";
    for (size_t i = 0; i < flat.positions.size(); ++i)
      os << (i ? "," : "") << flat.positions[i] + 1;
    os << "})";
    report.detail = os.str();
  }
  return report;
}

namespace {

int mod_vertex(int v, int gon) {
  v %= gon;
  if (v <= 0) v += gon;
  return v;
}

Diagonal make_diagonal(int a, int b, int gon) {
  a = mod_vertex(a, gon);
  b = mod_vertex(b, gon);
  if (a > b) std::swap(a, b);
  return {a, b};
}

Diagonal rotate_diagonal(const Diagonal& d, int gon) {
  return make_diagonal(d.first + 1, d.second + 1, gon);
}

}  // namespace

DiagonalMap typeA_diagonal_map(const ClusterInstance& cluster) {
  const CoxeterSystem& sys = cluster.instance.sys;
  const int n = sys.rank;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sys.coxeter(i, j) != (j == i + 1 ? 3 : 2))
        throw std::invalid_argument("diagonal map supports irreducible type A only");
  DiagonalMap map;
  map.gon = n + 3;
  std::vector<int> pos(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<size_t>(cluster.c[static_cast<size_t>(k)])] = k;
  // snake: walk the generator path, consuming a vertex on the right when
  // s_i precedes s_{i+1} in c and on the left otherwise
  int lo = 1, hi = 3;
  map.seed[0] = make_diagonal(lo, hi, map.gon);
  for (int i = 0; i + 1 < n; ++i) {
    if (pos[static_cast<size_t>(i)] < pos[static_cast<size_t>(i + 1)])
      hi += 1;
    else
      lo -= 1;
    map.seed[i + 1] = make_diagonal(lo, hi, map.gon);
  }
  std::vector<Diagonal> current(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) current[static_cast<size_t>(g)] = map.seed[g];
  std::vector<bool> started(static_cast<size_t>(n), false);
  for (const int letter : cluster.instance.word) {
    if (started[static_cast<size_t>(letter)])
      current[static_cast<size_t>(letter)] =
          rotate_diagonal(current[static_cast<size_t>(letter)], map.gon);
    started[static_cast<size_t>(letter)] = true;
    map.by_position.push_back(current[static_cast<size_t>(letter)]);
  }
  std::set<Diagonal> used(map.by_position.begin(), map.by_position.end());
  if (static_cast<int>(used.size()) != static_cast<int>(map.by_position.size()) ||
      static_cast<int>(used.size()) != n * (n + 3) / 2)
    throw std::logic_error("diagonal map is not a bijection onto the polygon diagonals");
  return map;
}

bool diagonals_cross(int gon, const Diagonal& a, const Diagonal& b) {
  (void)gon;
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    return false;
  const bool c_inside = a.first < b.first && b.first < a.second;
  const bool d_inside = a.first < b.second && b.second < a.second;
  return c_inside != d_inside;
}

}  // namespace swc

#include "subword/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swc {

namespace {

void validate_coxeter_matrix(const Eigen::MatrixXi& m) {
  const Eigen::Index n = m.rows();
  if (n == 0 && m.cols() == 0) return;
  if (m.cols() != n) throw std::invalid_argument("coxeter matrix must be square");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != 2) {
      std::ostringstream os;
      os << "coxeter matrix diagonal entry (" << i + 1 << "," << i + 1 << ") must be 2, got "
         << m(i, i);
      throw std::invalid_argument(os.str());
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const int v = m(i, j);
      if (m(j, i) != v) {
        std::ostringstream os;
        os << "coxeter matrix not symmetric at (" << i + 1 << "," << j + 1 << ")";
        throw std::invalid_argument(os.str());
      }
      if (v != kInfinity && v != 2 && v != 3 && v != 4 && v != 6) {
        std::ostringstream os;
        os << "coxeter matrix entry (" << i + 1 << "," << j + 1 << ") = " << v
           << " not in {2,3,4,6,inf}; only crystallographic types are supported";
        throw std::invalid_argument(os.str());
      }
    }
  }
}

int m_from_product(const Int& product) {
  if (product == 0) return 2;
  if (product == 1) return 3;
  if (product == 2) return 4;
  if (product == 3) return 6;
  return kInfinity;  // >= 4
}

void validate_cartan(const Eigen::MatrixXi& coxeter, const IMat& cartan) {
  const Eigen::Index n = coxeter.rows();
  if (cartan.rows() != n || cartan.cols() != n)
    throw std::invalid_argument("cartan matrix size does not match rank");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw std::invalid_argument("cartan diagonal must be 2");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) {
        std::ostringstream os;
        os << "cartan off-diagonal (" << i + 1 << "," << j + 1 << ") must be <= 0";
        throw std::invalid_argument(os.str());
      }
      const int m = m_from_product(cartan(i, j) * cartan(j, i));
      if (m != coxeter(i, j)) {
        std::ostringstream os;
        os << "cartan entries at (" << i + 1 << "," << j + 1 << ") give m=" << m
           << " but coxeter matrix says m=" << coxeter(i, j);
        throw std::invalid_argument(os.str());
      }
    }
  }
}

IMat default_cartan(const Eigen::MatrixXi& m) {
  const Eigen::Index n = m.rows();
  IMat a = IMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = 2;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Int lo = 0, hi = 0;
      switch (m(i, j)) {
        case 2: lo = 0; hi = 0; break;
        case 3: lo = -1; hi = -1; break;
        case 4: lo = -1; hi = -2; break;
        case 6: lo = -1; hi = -3; break;
        case kInfinity: lo = -2; hi = -2; break;
        default: throw std::invalid_argument("unexpected coxeter entry");
      }
      a(i, j) = lo;
      a(j, i) = hi;
    }
  }
  return a;
}

QVec compute_symmetrizer(const IMat& cartan) {
  const Eigen::Index n = cartan.rows();
  QVec d(n);
  std::vector<bool> seen(n, false);
  for (Eigen::Index start = 0; start < n; ++start) {
    if (seen[start]) continue;
    d(start) = 1;
    seen[start] = true;
    std::vector<Eigen::Index> queue{start};
    while (!queue.empty()) {
      const Eigen::Index i = queue.back();
      queue.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j || cartan(i, j) == 0) continue;
        const Rat required = d(i) * Rat(cartan(i, j)) / Rat(cartan(j, i));
        if (!seen[j]) {
          d(j) = required;
          seen[j] = true;
          queue.push_back(j);
        } else if (d(j) != required) {
          throw std::invalid_argument("cartan matrix is not symmetrizable (diagram cycle forces inconsistency)");
        }
      }
    }
  }
  return d;
}

std::vector<IMat> generator_matrices(const IMat& cartan) {
  const Eigen::Index n = cartan.rows();
  std::vector<IMat> gens;
  gens.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    IMat g = IMat::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) -= cartan(i, j);
    gens.push_back(std::move(g));
  }
  return gens;
}

CoxeterSystem assemble(const Eigen::MatrixXi& coxeter, const IMat& cartan) {
  CoxeterSystem sys;
  sys.rank = static_cast<int>(coxeter.rows());
  sys.coxeter = coxeter;
  sys.cartan = cartan;
  sys.symmetrizer = compute_symmetrizer(cartan);
  sys.bilinear = QMat(sys.rank, sys.rank);
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < sys.rank; ++j) sys.bilinear(i, j) = sys.symmetrizer(i) * Rat(cartan(i, j));
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < i; ++j)
      if (sys.bilinear(i, j) != sys.bilinear(j, i))
        throw std::logic_error("symmetrizer failed to symmetrize the cartan matrix");
  sys.generators = generator_matrices(cartan);
  return sys;
}

}  // namespace

CoxeterSystem build_system(const Eigen::MatrixXi& coxeter) {
  validate_coxeter_matrix(coxeter);
  return assemble(coxeter, default_cartan(coxeter));
}

CoxeterSystem build_system(const Eigen::MatrixXi& coxeter, const IMat& cartan) {
  validate_coxeter_matrix(coxeter);
  validate_cartan(coxeter, cartan);
  return assemble(coxeter, cartan);
}

CoxeterSystem system_from_cartan(const IMat& cartan) {
  const Eigen::Index n = cartan.rows();
  Eigen::MatrixXi m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = 2;
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) m(i, j) = m_from_product(cartan(i, j) * cartan(j, i));
  }
  return build_system(m, cartan);
}

Eigen::MatrixXi coxeter_matrix_of_type(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown type name: " + name);
  const bool affine = name[0] == 't';
  const std::string base = affine ? name.substr(1) : name;
  const char family = base[0];
  const int n = std::stoi(base.substr(1));
  if (n < 1) throw std::invalid_argument("rank must be positive: " + name);
  auto path = [](int rank) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Constant(rank, rank, 2);
    for (int i = 0; i + 1 < rank; ++i) {
      m(i, i + 1) = 3;
      m(i + 1, i) = 3;
    }
    return m;
  };
  if (!affine) {
    if (family == 'A') return path(n);
    if (family == 'B' || family == 'C') {
      if (n < 2) throw std::invalid_argument("B/C needs rank >= 2");
      Eigen::MatrixXi m = path(n);
      m(0, 1) = 4;
      m(1, 0) = 4;
      return m;
    }
    if (family == 'D') {
      if (n < 3) throw std::invalid_argument("D needs rank >= 3");
      Eigen::MatrixXi m = path(n);
      // fork at the tail: n-1 attaches to n-3 instead of n-2
      m(n - 2, n - 1) = 2;
      m(n - 1, n - 2) = 2;
      m(n - 3, n - 1) = 3;
      m(n - 1, n - 3) = 3;
      return m;
    }
  } else {
    if (family == 'A' && n == 1) {
      Eigen::MatrixXi m(2, 2);
      m << 2, kInfinity, kInfinity, 2;
      return m;
    }
    if (family == 'A') {
      // cycle of m=3 edges on n+1 nodes
      Eigen::MatrixXi m = Eigen::MatrixXi::Constant(n + 1, n + 1, 2);
      for (int i = 0; i <= n; ++i) {
        const int j = (i + 1) % (n + 1);
        m(i, j) = 3;
        m(j, i) = 3;
      }
      for (int i = 0; i <= n; ++i) m(i, i) = 2;
      return m;
    }
  }
  throw std::invalid_argument("unknown type name: " + name);
}

Eigen::MatrixXi coxeter_product(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  const Eigen::Index na = a.rows(), nb = b.rows();
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(na + nb, na + nb, 2);
  m.topLeftCorner(na, na) = a;
  m.bottomRightCorner(nb, nb) = b;
  return m;
}

IVec simple_root(const CoxeterSystem& sys, int i) {
  IVec v = IVec::Zero(sys.rank);
  v(i) = 1;
  return v;
}

IMat identity_element(const CoxeterSystem& sys) { return IMat::Identity(sys.rank, sys.rank); }

const IMat& generator(const CoxeterSystem& sys, int i) {
  if (i < 0 || i >= sys.rank) throw std::invalid_argument("generator index out of range");
  return sys.generators[static_cast<size_t>(i)];
}

int root_sign(const IVec& root) {
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < root.size(); ++i) {
    if (root(i) > 0) pos = true;
    if (root(i) < 0) neg = true;
  }
  if (pos == neg)
    throw std::logic_error("root sign dichotomy violated: vector is zero or mixed-sign");
  return pos ? 1 : -1;
}

Int height(const IVec& root) {
  Int h = 0;
  for (Eigen::Index i = 0; i < root.size(); ++i) h += root(i);
  return h;
}

IVec act(const CoxeterSystem& sys, int i, const IVec& root) {
  IVec out = generator(sys, i) * root;
  root_sign(out);
  return out;
}

Rat form(const CoxeterSystem& sys, const IVec& a, const IVec& b) {
  Rat total = 0;
  for (int i = 0; i < sys.rank; ++i) {
    if (a(i) == 0) continue;
    Rat row = 0;
    for (int j = 0; j < sys.rank; ++j)
      if (b(j) != 0) row += sys.bilinear(i, j) * Rat(b(j));
    total += Rat(a(i)) * row;
  }
  return total;
}

Int pairing(const CoxeterSystem& sys, const IVec& beta, const IVec& gamma) {
  const Rat value = 2 * form(sys, beta, gamma) / form(sys, beta, beta);
  if (value.get_den() != 1)
    throw std::logic_error("non-integral cartan pairing between roots");
  return value.get_num();
}

IMat reflection(const CoxeterSystem& sys, const IVec& root) {
  IMat m = IMat::Identity(sys.rank, sys.rank);
  for (int j = 0; j < sys.rank; ++j) {
    const Int n_j = pairing(sys, root, simple_root(sys, j));
    if (n_j == 0) continue;
    for (int i = 0; i < sys.rank; ++i) m(i, j) -= n_j * root(i);
  }
  return m;
}

IMat word_element(const CoxeterSystem& sys, const Word& word) {
  IMat g = identity_element(sys);
  for (const int letter : word) g = g * generator(sys, letter);
  IMat inv = identity_element(sys);
  for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv * generator(sys, *it);
  if (IMat(g * inv) != identity_element(sys))
    throw std::logic_error("word element is not integrally invertible");
  return g;
}

int element_length(const CoxeterSystem& sys, IMat g) {
  int steps = 0;
  const int cap = 1 << 20;
  while (true) {
    int descent = -1;
    for (int i = 0; i < sys.rank; ++i) {
      if (root_sign(g.col(i)) < 0) {
        descent = i;
        break;
      }
    }
    if (descent < 0) return steps;
    g = g * generator(sys, descent);
    if (++steps > cap) throw std::logic_error("element_length failed to terminate");
  }
}

IMat inverse_element(const CoxeterSystem& sys, IMat g) {
  IMat inv = identity_element(sys);
  const int cap = 1 << 20;
  int steps = 0;
  while (true) {
    int descent = -1;
    for (int i = 0; i < sys.rank; ++i) {
      if (root_sign(g.col(i)) < 0) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    g = g * generator(sys, descent);
    inv = inv * generator(sys, descent);  // g * (s_d1 ... s_dk) = e
    if (++steps > cap) throw std::logic_error("inverse_element failed to terminate");
  }
  if (g != identity_element(sys))
    throw std::invalid_argument("inverse_element: matrix is not a group element");
  return inv;
}

bool is_reduced(const CoxeterSystem& sys, const Word& word) {
  return element_length(sys, word_element(sys, word)) == static_cast<int>(word.size());
}

std::vector<IVec> inversions(const CoxeterSystem& sys, const Word& word) {
  std::vector<IVec> out;
  out.reserve(word.size());
  IMat prefix = identity_element(sys);
  for (const int letter : word) {
    IVec gamma = prefix.col(letter);
    root_sign(gamma);
    out.push_back(std::move(gamma));
    prefix = prefix * generator(sys, letter);
  }
  return out;
}

bool is_finite(const CoxeterSystem& sys) { return is_positive_definite(sys.bilinear); }

Finiteness finiteness_and_longest(const CoxeterSystem& sys) {
  Finiteness result;
  result.finite = is_finite(sys);
  if (!result.finite) return result;
  IMat g = identity_element(sys);
  const int cap = 1 << 20;
  int steps = 0;
  while (true) {
    int ascent = -1;
    for (int i = 0; i < sys.rank; ++i) {
      if (root_sign(g.col(i)) > 0) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) break;
    g = g * generator(sys, ascent);
    if (++steps > cap) throw std::logic_error("longest element search failed to terminate");
  }
  result.w0 = std::move(g);
  return result;
}

bool is_root(const CoxeterSystem& sys, const IVec& v) {
  if (v.size() != sys.rank) return false;
  bool pos = false, neg = false;
  for (int i = 0; i < sys.rank; ++i) {
    if (v(i) > 0) pos = true;
    if (v(i) < 0) neg = true;
  }
  if (pos == neg) return false;
  IVec w = pos ? v : IVec(-v);
  while (true) {
    int nonzero = 0;
    int support = -1;
    for (int i = 0; i < sys.rank; ++i) {
      if (w(i) < 0) return false;
      if (w(i) != 0) {
        ++nonzero;
        support = i;
      }
    }
    if (nonzero == 1 && w(support) == 1) return true;
    int descent = -1;
    for (int i = 0; i < sys.rank; ++i) {
      Int c = 0;
      for (int j = 0; j < sys.rank; ++j) c += sys.cartan(i, j) * w(j);
      if (c > 0) {
        descent = i;
        break;
      }
    }
    if (descent < 0) return false;  // no height descent: not in the reflection orbit
    IVec next = generator(sys, descent) * w;
    w = std::move(next);
  }
}

std::vector<IVec> positive_roots_up_to_height(const CoxeterSystem& sys, const Int& h) {
  std::vector<IVec> out;
  if (sys.rank == 0) return out;
  std::set<std::vector<Int>> seen;
  auto keyof = [&](const IVec& v) {
    std::vector<Int> k(static_cast<size_t>(sys.rank));
    for (int i = 0; i < sys.rank; ++i) k[static_cast<size_t>(i)] = v(i);
    return k;
  };
  std::vector<IVec> frontier;
  for (int i = 0; i < sys.rank; ++i) {
    if (h < 1) break;
    IVec a = simple_root(sys, i);
    if (seen.insert(keyof(a)).second) {
      out.push_back(a);
      frontier.push_back(std::move(a));
    }
  }
  // every positive root reaches a simple root by height-strictly-decreasing
  // reflections, so growing by height-increasing steps is exhaustive
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const IVec& beta : frontier) {
      for (int i = 0; i < sys.rank; ++i) {
        IVec gamma = generator(sys, i) * beta;
        if (height(gamma) <= height(beta) || height(gamma) > h) continue;
        if (seen.insert(keyof(gamma)).second) {
          out.push_back(gamma);
          next.push_back(std::move(gamma));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  return out;
}

RootSubsystem RootSubsystem::subspace(const CoxeterSystem& sys, const QMat& span_rows) {
  RootSubsystem sub;
  sub.host_ = &sys;
  sub.explicit_mode_ = false;
  sub.basis_ = row_basis(span_rows);
  return sub;
}

RootSubsystem RootSubsystem::span_of_roots(const CoxeterSystem& sys,
                                           const std::vector<IVec>& roots) {
  QMat rows(static_cast<Eigen::Index>(roots.size()), sys.rank);
  for (size_t r = 0; r < roots.size(); ++r) rows.row(static_cast<Eigen::Index>(r)) = to_rat(roots[r]).transpose();
  return subspace(sys, rows);
}

RootSubsystem RootSubsystem::explicit_simples(const CoxeterSystem& sys,
                                              std::vector<IVec> simples) {
  RootSubsystem sub;
  sub.host_ = &sys;
  sub.explicit_mode_ = true;
  for (const IVec& s : simples)
    if (!is_root(sys, s) || root_sign(s) < 0)
      throw std::invalid_argument("explicit subsystem simple roots must be positive roots");
  sub.simples_ = std::move(simples);
  const int r = static_cast<int>(sub.simples_.size());
  IMat cartan(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) cartan(a, b) = pairing(sys, sub.simples_[static_cast<size_t>(a)], sub.simples_[static_cast<size_t>(b)]);
  sub.sub_ = system_from_cartan(cartan);
  return sub;
}

bool RootSubsystem::contains(const IVec& root) const {
  if (!explicit_mode_) return in_row_span(basis_, to_rat(root));
  const int r = static_cast<int>(simples_.size());
  if (r == 0) return false;
  QMat cols(host_->rank, r);
  for (int a = 0; a < r; ++a) cols.col(a) = to_rat(simples_[static_cast<size_t>(a)]);
  const auto x = solve_columns(cols, to_rat(root));
  if (!x) return false;
  IVec coeffs(r);
  for (int a = 0; a < r; ++a) {
    if ((*x)(a).get_den() != 1) return false;
    coeffs(a) = (*x)(a).get_num();
  }
  return is_root(*sub_, coeffs);
}

bool RootSubsystem::is_simple(const IVec& root) const {
  if (root_sign(root) < 0) return false;
  if (explicit_mode_) {
    for (const IVec& s : simples_)
      if (s == root) return true;
    return false;
  }
  if (!contains(root)) return false;
  const IMat refl = reflection(*host_, root);
  for (const IVec& gamma : positive_roots_up_to_height(*host_, height(root))) {
    if (gamma == root || !contains(gamma)) continue;
    if (root_sign(IVec(refl * gamma)) < 0) return false;
  }
  return true;
}

RestrictedWord restrict_inversions(const CoxeterSystem& sys, const Word& p,
                                   const RootSubsystem& sub) {
  RestrictedWord out;
  const std::vector<IVec> inv = inversions(sys, p);
  IMat v_inv = identity_element(sys);
  for (size_t pos = 0; pos < inv.size(); ++pos) {
    const IVec& gamma = inv[pos];
    if (!sub.contains(gamma)) continue;
    out.kept.push_back(static_cast<int>(pos));
    out.kept_roots.push_back(gamma);
    // gamma = v(alpha) for the next letter's simple root alpha, signs included
    const IVec delta = v_inv * gamma;
    if (root_sign(delta) < 0 || !sub.is_simple(delta))
      throw std::logic_error(
          "restriction failure: w^-1(gamma) is not simple in the subsystem");
    int letter = -1;
    for (size_t k = 0; k < out.simples.size(); ++k) {
      if (out.simples[k] == delta) {
        letter = static_cast<int>(k);
        break;
      }
    }
    if (letter < 0) {
      letter = static_cast<int>(out.simples.size());
      out.simples.push_back(delta);
    }
    out.word.push_back(letter);
    v_inv = reflection(sys, delta) * v_inv;
  }
  const int r = static_cast<int>(out.simples.size());
  IMat cartan(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      cartan(a, b) = pairing(sys, out.simples[static_cast<size_t>(a)], out.simples[static_cast<size_t>(b)]);
  out.system = system_from_cartan(cartan);
  return out;
}

}  // namespace swc

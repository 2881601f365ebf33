#include "subword/numeric.hpp"

#include <stdexcept>

namespace swc {

QMat to_rat(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

QVec to_rat(const IVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

int row_reduce(QMat& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    const Rat inv = Rat(1) / a(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) a(rank, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const Rat factor = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

int rank_of(QMat a) { return row_reduce(a); }

QMat row_basis(QMat a) {
  const int rank = row_reduce(a);
  return a.topRows(rank);
}

bool in_row_span(const QMat& rref, const QVec& v) {
  QVec w = v;
  for (Eigen::Index r = 0; r < rref.rows(); ++r) {
    Eigen::Index pivot = -1;
    for (Eigen::Index c = 0; c < rref.cols(); ++c) {
      if (rref(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    if (w(pivot) != 0) {
      const Rat factor = w(pivot) / rref(r, pivot);
      for (Eigen::Index c = 0; c < rref.cols(); ++c) w(c) -= factor * rref(r, c);
    }
  }
  for (Eigen::Index c = 0; c < w.size(); ++c)
    if (w(c) != 0) return false;
  return true;
}

std::optional<QVec> solve_columns(const QMat& a, const QVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_columns: size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  row_reduce(aug);
  QVec x = QVec::Zero(a.cols());
  for (Eigen::Index r = 0; r < aug.rows(); ++r) {
    Eigen::Index pivot = -1;
    for (Eigen::Index c = 0; c < aug.cols(); ++c) {
      if (aug(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot == a.cols()) return std::nullopt;  // inconsistent row
    x(pivot) = aug(r, a.cols());
  }
  return x;
}

bool is_positive_definite(const QMat& sym) {
  QMat a = sym;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("is_positive_definite: not square");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rat factor = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return true;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat rat_from_string(const std::string& text) {
  Rat value;
  if (value.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  value.canonicalize();
  return value;
}

}  // namespace swc

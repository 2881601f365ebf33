#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <optional>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace swc {

using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

QMat to_rat(const IMat& m);
QVec to_rat(const IVec& v);

/// In-place reduced row echelon form over Q. Returns the rank.
int row_reduce(QMat& a);

int rank_of(QMat a);

/// RREF basis of the row space, zero rows dropped. Canonical per subspace,
/// so subspaces compare by matrix equality.
QMat row_basis(QMat a);

/// Membership of v in the row space of an RREF basis.
bool in_row_span(const QMat& rref, const QVec& v);

/// Solves a*x = b exactly (a has full meaning as a set of columns).
std::optional<QVec> solve_columns(const QMat& a, const QVec& b);

/// Sylvester criterion on a symmetric rational matrix.
bool is_positive_definite(const QMat& sym);

std::string rat_to_string(const Rat& value);
Rat rat_from_string(const std::string& text);

}  // namespace swc

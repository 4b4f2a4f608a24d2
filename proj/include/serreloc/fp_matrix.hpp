#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace serreloc {

/// Dense matrix with entries in [0, p) standing for elements of the prime field F_p.
using FpMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

namespace fp {

inline int mod(long long v, int p) {
  const long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

/// Multiplicative inverse of a non-zero residue.
int inverse(int a, int p);

template <typename Derived>
FpMatrix reduce(const Eigen::MatrixBase<Derived>& m, int p) {
  return m.unaryExpr([p](int v) { return mod(v, p); }).eval();
}

inline FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, int p) {
  // Entries stay below p^2 * inner dimension, far from overflow at the sizes used here.
  return reduce(a * b, p);
}

struct Echelon {
  FpMatrix rref;
  std::vector<Eigen::Index> pivots;  ///< pivot column of each non-zero row
};

/// Reduced row echelon form.
Echelon row_echelon(FpMatrix m, int p);

Eigen::Index rank(const FpMatrix& m, int p);

/// Columns form a basis of {x : m x = 0}.
FpMatrix nullspace(const FpMatrix& m, int p);

/// Some x with a x = b, if the system is consistent.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, int p);

std::optional<FpMatrix> inverse(const FpMatrix& m, int p);

inline bool invertible(const FpMatrix& m, int p) {
  return m.rows() == m.cols() && rank(m, p) == m.rows();
}

/// Canonical basis of the column space: the transposed non-zero rows of rref(m^T).
/// Two matrices span the same subspace iff their canonical bases are equal.
FpMatrix canonical_basis(const FpMatrix& m, int p);

/// Whether the column space of `a` lies inside that of `b`.
bool column_space_contained(const FpMatrix& a, const FpMatrix& b, int p);

/// Canonical bases (n x k matrices) of every subspace of F_p^n, by increasing dimension.
const std::vector<FpMatrix>& all_subspaces(int n, int p);

/// Basis of F_p^n extending the columns of `basis`; returns only the added columns.
FpMatrix complement_basis(const FpMatrix& basis, int n, int p);

}  // namespace fp
}  // namespace serreloc

#pragma once

// Exact Gaussian elimination over a field scalar. Eigen's own decompositions
// pivot on magnitude and assume rounding, so the exact kernels live here as
// free functions over Eigen expressions.

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace ugdual::linalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Echelon {
  DenseMatrix<Scalar> reduced;     // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  [[nodiscard]] Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// in column order, so the result is canonical for the row space.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = input;
  auto& m = out.reduced;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != Scalar(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(r, j) != Scalar(0)) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Columns form a basis of the right kernel {x : m x = 0}.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
      basis(ech.pivots[static_cast<std::size_t>(r)], static_cast<Eigen::Index>(k)) = -ech.reduced(r, f);
    }
  }
  return basis;
}

/// Some solution of a x = b, or nullopt if the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = rref(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    x(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced(r, a.cols());
  }
  return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <typename Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  const auto ech = rref(aug);
  if (ech.rank() < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n)) return std::nullopt;
  return DenseMatrix<Scalar>(ech.reduced.rightCols(n));
}

/// Indices of a maximal linearly independent set of columns, chosen greedily
/// left to right.
template <typename Derived>
std::vector<Eigen::Index> independent_columns(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).pivots;
}

/// Whether v lies in the column span of basis (basis may be empty).
template <typename DerivedA, typename DerivedB>
bool in_column_span(const Eigen::MatrixBase<DerivedA>& basis, const Eigen::MatrixBase<DerivedB>& v) {
  if (basis.cols() == 0) return is_zero(v);
  return solve(basis, v).has_value();
}

/// Kronecker product a ⊗ b, index (i, j) of the result row block i*rows(b)+j.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == Scalar(0)) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace ugdual::linalg

#pragma once

#include <Eigen/Dense>

#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace prasad {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

// Built-in integers are overflow checked; arbitrary-precision scalars pass through.
template <typename S>
S checked_mul(const S& a, const S& b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
  } else {
    return S(a * b);
  }
}

template <typename S>
S checked_add(const S& a, const S& b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
  } else {
    return S(a + b);
  }
}

template <typename S>
S iabs(const S& a) {
  return a < 0 ? S(-a) : a;
}

// row dst += k * row src
template <typename S>
void add_row_multiple(IntMatrix<S>& M, Eigen::Index dst, Eigen::Index src, const S& k) {
  for (Eigen::Index j = 0; j < M.cols(); ++j) M(dst, j) = checked_add(M(dst, j), checked_mul(k, M(src, j)));
}

// col dst += k * col src
template <typename S>
void add_col_multiple(IntMatrix<S>& M, Eigen::Index dst, Eigen::Index src, const S& k) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) M(i, dst) = checked_add(M(i, dst), checked_mul(k, M(i, src)));
}

}  // namespace detail

// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... (d_i > 0 for i < rank).
template <typename Scalar>
struct SmithDecomposition {
  IntMatrix<Scalar> U, Uinv, D, V;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const IntMatrix<Scalar>& A) {
  static_assert(std::numeric_limits<Scalar>::is_integer, "Smith normal form needs an integer scalar");
  using Index = Eigen::Index;
  const Index m = A.rows(), n = A.cols();
  SmithDecomposition<Scalar> s;
  s.D = A;
  s.U = IntMatrix<Scalar>::Identity(m, m);
  s.Uinv = IntMatrix<Scalar>::Identity(m, m);
  s.V = IntMatrix<Scalar>::Identity(n, n);
  auto& D = s.D;

  auto row_add = [&](Index i, Index j, Scalar k) {
    detail::add_row_multiple(D, i, j, k);
    detail::add_row_multiple(s.U, i, j, k);
    detail::add_col_multiple(s.Uinv, j, i, Scalar(-k));
  };
  auto row_swap = [&](Index i, Index j) {
    D.row(i).swap(D.row(j));
    s.U.row(i).swap(s.U.row(j));
    s.Uinv.col(i).swap(s.Uinv.col(j));
  };
  auto col_add = [&](Index i, Index j, Scalar k) {
    detail::add_col_multiple(D, i, j, k);
    detail::add_col_multiple(s.V, i, j, k);
  };
  auto col_swap = [&](Index i, Index j) {
    D.col(i).swap(D.col(j));
    s.V.col(i).swap(s.V.col(j));
  };

  // nearest-integer quotient keeps remainders at most half the pivot
  auto nearest_quotient = [](Scalar b, Scalar a) {
    Scalar q = b / a, r = b % a;
    if (detail::iabs(Scalar(2 * r)) > detail::iabs(a)) q += ((r < 0) == (a < 0)) ? Scalar(1) : Scalar(-1);
    return q;
  };

  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || detail::iabs(D(i, j)) < detail::iabs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      bool clear = true;
      for (Index i = t + 1; i < m; ++i)
        if (D(i, t) != 0) {
          row_add(i, t, static_cast<Scalar>(-nearest_quotient(D(i, t), D(t, t))));
          if (D(i, t) != 0) clear = false;
        }
      for (Index j = t + 1; j < n; ++j)
        if (D(t, j) != 0) {
          col_add(j, t, static_cast<Scalar>(-nearest_quotient(D(t, j), D(t, t))));
          if (D(t, j) != 0) clear = false;
        }
      if (!clear) continue;
      bool fixed = false;
      for (Index i = t + 1; i < m && !fixed; ++i)
        for (Index j = t + 1; j < n && !fixed; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, Scalar(1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (D(t, t) == 0) break;
    if (D(t, t) < 0) {
      D.row(t) *= Scalar(-1);
      s.U.row(t) *= Scalar(-1);
      s.Uinv.col(t) *= Scalar(-1);
    }
  }
  s.rank = t;
  return s;
}

// Basis (columns) of {x in Z^n : A x = 0}.
template <typename Scalar>
IntMatrix<Scalar> integer_kernel(const IntMatrix<Scalar>& A) {
  auto s = smith_normal_form(A);
  return s.V.rightCols(A.cols() - s.rank);
}

// Independent columns spanning the same lattice as the columns of G.
template <typename Scalar>
IntMatrix<Scalar> lattice_basis(const IntMatrix<Scalar>& G) {
  auto s = smith_normal_form(G);
  IntMatrix<Scalar> B(G.rows(), s.rank);
  for (Eigen::Index i = 0; i < s.rank; ++i)
    for (Eigen::Index r = 0; r < G.rows(); ++r) B(r, i) = detail::checked_mul(s.Uinv(r, i), s.D(i, i));
  return B;
}

// Basis of (Q-span of G) intersected with Z^n.
template <typename Scalar>
IntMatrix<Scalar> saturation(const IntMatrix<Scalar>& G) {
  auto s = smith_normal_form(G);
  return s.Uinv.leftCols(s.rank);
}

// Some integer x with B x = b, if one exists.
template <typename Scalar>
std::optional<IntVector<Scalar>> solve_integer(const IntMatrix<Scalar>& B, const IntVector<Scalar>& b) {
  auto s = smith_normal_form(B);
  IntVector<Scalar> c = IntVector<Scalar>::Zero(B.rows());
  for (Eigen::Index i = 0; i < B.rows(); ++i)
    for (Eigen::Index j = 0; j < B.rows(); ++j) c(i) = detail::checked_add(c(i), detail::checked_mul(s.U(i, j), b(j)));
  IntVector<Scalar> y = IntVector<Scalar>::Zero(B.cols());
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    if (i < s.rank) {
      if (c(i) % s.D(i, i) != 0) return std::nullopt;
      y(i) = c(i) / s.D(i, i);
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  IntVector<Scalar> x = IntVector<Scalar>::Zero(B.cols());
  for (Eigen::Index i = 0; i < B.cols(); ++i)
    for (Eigen::Index j = 0; j < B.cols(); ++j) x(i) = detail::checked_add(x(i), detail::checked_mul(s.V(i, j), y(j)));
  return x;
}

}  // namespace prasad

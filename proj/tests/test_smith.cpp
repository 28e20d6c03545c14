#include <gtest/gtest.h>

#include <random>

#include "prasad/smith.hpp"

namespace Eigen {
template <>
struct NumTraits<__int128> : GenericNumTraits<__int128> {
  enum { IsInteger = 1, IsSigned = 1, RequireInitialization = 0, ReadCost = 1, AddCost = 1, MulCost = 1 };
  typedef __int128 Real;
  typedef double NonInteger;
  typedef __int128 Nested;
};
}  // namespace Eigen

using namespace prasad;
using M = IntMatrix<long long>;

namespace {

using Big = __int128;

template <typename S>
void check_decomposition(const IntMatrix<S>& A) {
  using M = IntMatrix<S>;
  auto s = smith_normal_form(A);
  ASSERT_TRUE(M(s.U * A * s.V) == s.D);
  ASSERT_TRUE(M(s.U * s.Uinv) == M(M::Identity(A.rows(), A.rows())));
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) ASSERT_TRUE(s.D(i, j) == 0);
  for (Eigen::Index i = 0; i < s.rank; ++i) {
    ASSERT_TRUE(s.D(i, i) > 0);
    if (i + 1 < s.rank) ASSERT_TRUE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  }
  for (Eigen::Index i = s.rank; i < std::min(A.rows(), A.cols()); ++i) ASSERT_TRUE(s.D(i, i) == 0);
}

}  // namespace

TEST(Smith, KnownExample) {
  M A(3, 3);
  A << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  auto s = smith_normal_form(A);
  EXPECT_EQ(s.diagonal(), (std::vector<long long>{2, 6, 12}));
  check_decomposition(A);
}

TEST(Smith, RandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    M A(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < A.size(); ++i) A(i) = entry(rng);
    check_decomposition(A);
  }
}

TEST(Smith, LargerRandomMatricesOverflowOrAgree) {
  // with 64-bit scalars the transforms may overflow; that must be reported,
  // and otherwise the diagonal must match the 128-bit run
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9), dim(5, 8);
  int agreed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    M A(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < A.size(); ++i) A(i) = entry(rng);
    IntMatrix<Big> B = A.cast<Big>();
    check_decomposition(B);
    auto big = smith_normal_form(B).diagonal();
    try {
      auto small = smith_normal_form(A).diagonal();
      ASSERT_EQ(small.size(), big.size());
      for (size_t i = 0; i < small.size(); ++i) ASSERT_TRUE(Big(small[i]) == big[i]);
      ++agreed;
    } catch (const std::overflow_error&) {
    }
  }
  EXPECT_GT(agreed, 0);
}

TEST(Smith, WorksForIntScalar) {
  IntMatrix<int> A(2, 2);
  A << 4, 0, 0, 6;
  auto s = smith_normal_form(A);
  EXPECT_EQ(s.diagonal(), (std::vector<int>{2, 12}));
}

TEST(Smith, OverflowIsReported) {
  M A(2, 2);
  A << (1LL << 62), 3, 5, (1LL << 62);
  EXPECT_THROW(smith_normal_form(A), std::overflow_error);
}

TEST(Lattice, KernelAndSolve) {
  M A(2, 3);
  A << 1, 2, 3, 4, 5, 6;
  M K = integer_kernel(A);
  ASSERT_EQ(K.cols(), 1);
  EXPECT_TRUE((A * K).isZero());
  EXPECT_EQ(std::abs(K(0, 0)), 1);

  M B(2, 2);
  B << 2, 0, 0, 3;
  IntVector<long long> b(2);
  b << 4, 9;
  auto x = solve_integer(B, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(B * *x, b);
  b << 3, 9;
  EXPECT_FALSE(solve_integer(B, b).has_value());
}

TEST(Lattice, BasisAndSaturation) {
  M G(2, 3);
  G << 2, 4, 6, 0, 0, 0;
  M B = lattice_basis(G);
  ASSERT_EQ(B.cols(), 1);
  EXPECT_EQ(std::abs(B(0, 0)), 2);
  M S = saturation(G);
  ASSERT_EQ(S.cols(), 1);
  EXPECT_EQ(std::abs(S(0, 0)), 1);
  EXPECT_EQ(S(1, 0), 0);
}

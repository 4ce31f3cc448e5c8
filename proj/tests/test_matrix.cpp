#include <gtest/gtest.h>

#include "kzlab/linalg/matrix.hpp"
#include "kzlab/number/alpha.hpp"

using namespace kzlab;

TEST(Matrix, ProductAndInverseOverRationals) {
  Matrix<Rational> a{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  auto inv = a.inverse();
  EXPECT_EQ(a * inv, Matrix<Rational>::identity(2));
  EXPECT_EQ(a.determinant(), Rational(1));
  EXPECT_EQ(a.rank(), 2u);
}

TEST(Matrix, CharpolyOfCompanion) {
  // companion of x^3 - 2x + 5
  Matrix<Rational> c{{Rational(0), Rational(0), Rational(-5)},
                     {Rational(1), Rational(0), Rational(2)},
                     {Rational(0), Rational(1), Rational(0)}};
  auto p = c.charpoly();
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], Rational(5));
  EXPECT_EQ(p[1], Rational(-2));
  EXPECT_EQ(p[2], Rational(0));
  EXPECT_EQ(p[3], Rational(1));
}

TEST(Matrix, NullspaceAndSolve) {
  Matrix<Rational> a{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  auto ns = a.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    auto w = a.apply(v);
    for (const auto& x : w) EXPECT_TRUE(x.is_zero());
  }
  Matrix<Rational> b{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  auto x = b.solve({Rational(3), Rational(1)});
  EXPECT_EQ(x[0], Rational(2));
  EXPECT_EQ(x[1], Rational(1));
  Matrix<Rational> s{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  EXPECT_THROW(s.solve({Rational(1), Rational(0)}), DegenerateConfiguration);
}

TEST(Matrix, CyclotomicConjTransposeAndDet) {
  auto a = AlphaParam::parse("1/5");
  ExactMatrix m{{a.rho(), CyclotomicNumber(1)}, {CyclotomicNumber(0), a.zeta()}};
  auto h = m.conj_transpose();
  EXPECT_EQ(h(0, 0), a.zeta());
  EXPECT_EQ(h(1, 0), CyclotomicNumber(1));
  EXPECT_EQ(m.determinant(), CyclotomicNumber(1));
  EXPECT_EQ(m * m.inverse(), ExactMatrix::identity(2));
}

TEST(Matrix, RealifyPreservesProducts) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(3, 3);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Random(3, 3);
  EXPECT_LT((realify(a * b) - realify(a) * realify(b)).norm(), 1e-12);
}

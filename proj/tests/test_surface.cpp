#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kzlab/surface/surface.hpp"

using namespace kzlab;

TEST(SingularityProfile, GenusTwoFromPentagons) {
  auto p = singularity_profile({1, 5});
  EXPECT_EQ(p.genus, 2);
  EXPECT_EQ(p.m_points, 5);
  EXPECT_EQ(p.m_angle_turns, Rational(1));
  EXPECT_EQ(p.a_points, 1);
  EXPECT_EQ(p.a_angle_turns, Rational(3));
  EXPECT_TRUE(p.gauss_bonnet_holds());
}

TEST(SingularityProfile, TorusFromTriangles) { EXPECT_EQ(singularity_profile({1, 3}).genus, 1); }

TEST(SingularityProfile, SquaresWithKTwo) {
  auto p = singularity_profile({2, 4});
  EXPECT_EQ(p.params.varpi(), 4);
  EXPECT_EQ(p.genus, 3);
  EXPECT_EQ(p.m_angle_turns, Rational(2));
  EXPECT_EQ(p.a_points, 4);
  EXPECT_EQ(p.a_angle_turns, Rational(1));
  EXPECT_EQ(p.order_sum(), Rational(4));
  EXPECT_TRUE(p.gauss_bonnet_holds());
}

TEST(SingularityProfile, SweepGaussBonnetAndBookkeeping) {
  for (int k = 1; k <= 8; ++k) {
    for (int ell = 3; ell <= 12; ++ell) {
      SurfaceParams sp(k, ell);
      auto p = singularity_profile(sp);
      EXPECT_EQ(ell % 2, sp.varpi() % 2);
      EXPECT_TRUE(p.gauss_bonnet_holds()) << k << "," << ell;
      EXPECT_EQ(static_cast<int>(p.points.size()), ell + sp.varpi());
      EXPECT_EQ(2 * k * ell - (2 * k - 1), 2 * p.genus + (ell + sp.varpi() - 1));
      // the printed stratum orders agree with the cone angles only for k = 1
      EXPECT_EQ(p.stratum_label_matches(), k == 1) << k << "," << ell;
    }
  }
}

TEST(IntersectionPairing, Examples) {
  SurfaceParams k1(1, 5), k2(2, 5);
  using C = CycleCoefficients<Rational>;
  EXPECT_EQ(intersection_pairing(C{1, {1, -1}}, C{1, {1, -1}}, k1), Rational(0));
  EXPECT_EQ(intersection_pairing(C{0, {1, -1, 0, 0}}, C{0, {0, 1, -1, 0}}, k2), Rational(1));
  EXPECT_EQ(intersection_pairing(C{2, {1, -1}}, C{0, {1, -1}}, k1), Rational(1));
  EXPECT_EQ(intersection_pairing(C{0, {1, -1}}, C{2, {1, -1}}, k1), Rational(-1));
  EXPECT_THROW(intersection_pairing(C{0, {1, 0}}, C{0, {1, -1}}, k1), NonAbsoluteCycle);
}

TEST(IntersectionPairing, BilinearAndAntisymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  SurfaceParams sp(4, 7);
  auto random_cycle = [&](int p) {
    CycleCoefficients<Rational> c{p, std::vector<Rational>(8)};
    Rational s(0);
    for (int i = 1; i < 8; ++i) {
      c.coeffs[static_cast<std::size_t>(i)] = Rational(dist(rng));
      s += c.coeffs[static_cast<std::size_t>(i)];
    }
    c.coeffs[0] = -s;
    return c;
  };
  for (int trial = 0; trial < 50; ++trial) {
    for (auto [pa, pb] : {std::pair{2, 2}, std::pair{4, -2}, std::pair{-4, 0}}) {
      auto a = random_cycle(pa), a2 = random_cycle(pa), b = random_cycle(pb);
      EXPECT_EQ(intersection_pairing(a, b, sp), -intersection_pairing(b, a, sp));
      CycleCoefficients<Rational> sum{pa, a.coeffs};
      for (std::size_t i = 0; i < 8; ++i) sum.coeffs[i] = Rational(3) * a.coeffs[i] + a2.coeffs[i];
      EXPECT_EQ(intersection_pairing(sum, b, sp),
                Rational(3) * intersection_pairing(a, b, sp) + intersection_pairing(a2, b, sp));
    }
  }
}

TEST(HodgeGram, KTwoROneRawValues) {
  auto h = hodge_gram({2, 5}, 1);
  EXPECT_EQ(h.raw_diagonal, CyclotomicNumber(-2));
  // p > p' sits below the diagonal in ascending order
  EXPECT_EQ(h.omega(2, 0), CyclotomicNumber(1));
  auto off = h.rescaled.entries(2, 0).approx_complex();
  EXPECT_NEAR(off.real(), 0.5, 1e-14);
  EXPECT_NEAR(off.imag(), -0.5, 1e-14);
  EXPECT_EQ(h.rescaled.entries(2, 0), CyclotomicNumber(Rational(1, 2)) * (CyclotomicNumber(1) - root_of_unity(4, 1)));
}

TEST(HodgeGram, ClosedFormsForAllSmallK) {
  for (int k = 2; k <= 8; ++k) {
    for (int r = 1; r < k; ++r) {
      auto h = hodge_gram({k, 5}, r);
      const double th = M_PI * r / k;
      const double diag = -k * (1 + std::cos(th)) / std::sin(th);
      EXPECT_NEAR(h.raw_diagonal.approx_complex().real(), diag, 1e-12);
      EXPECT_TRUE(h.raw_diagonal.is_real());
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
          auto z = h.raw(a, b).approx_complex();
          EXPECT_NEAR(z.real(), diag / 2, 1e-12);
          EXPECT_NEAR(z.imag(), k / 2.0, 1e-12);
          EXPECT_EQ(h.omega(a, b), CyclotomicNumber(Rational(k, 2)));
          auto w = h.rescaled.entries(a, b).approx_complex();
          EXPECT_NEAR(w.imag(), -0.5 * std::tan(M_PI * r / (2 * k)), 1e-12);
        }
      }
      EXPECT_TRUE(h.rescaled.is_hermitian());
    }
  }
}

TEST(HodgeGram, DegenerateAngle) {
  EXPECT_THROW(hodge_gram({2, 5}, 2), DegenerateAngle);
  EXPECT_THROW(hodge_gram({3, 5}, 0), DegenerateAngle);
}

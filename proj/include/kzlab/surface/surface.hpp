#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "kzlab/alphabet.hpp"
#include "kzlab/errors.hpp"
#include "kzlab/linalg/hermitian.hpp"
#include "kzlab/linalg/matrix.hpp"
#include "kzlab/number/cyclotomic.hpp"
#include "kzlab/number/rational.hpp"

namespace kzlab {

/// Parameters of the surface M_{k,l}: 2k copies of a regular l-gon.
struct SurfaceParams {
  int k = 1;
  int ell = 3;

  SurfaceParams(int k_, int ell_) : k(k_), ell(ell_) {
    if (k < 1) throw InvalidArgument("k must be positive");
    if (ell < 3) throw InvalidArgument("ell must be at least 3");
  }

  int varpi() const { return std::gcd(2 * k, ell); }
  /// lcm(2k, l)
  int Pi() const { return 2 * k * ell / varpi(); }
  int d() const { return ell - 1; }
  int order() const { return 4 * k * ell; }
};

struct ConePoint {
  char kind;            // 'M' or 'A'
  Rational angle_turns;  // cone angle divided by 2 pi
  Rational order;        // angle_turns - 1
};

struct SingularityProfile {
  SurfaceParams params;
  int genus = 0;
  int m_points = 0;
  int a_points = 0;
  Rational m_angle_turns;
  Rational a_angle_turns;
  std::vector<ConePoint> points;
  std::vector<Rational> cone_orders;

  /// Orders as printed in the stratum label H(k-1, ..., k(l-2-varpi)/varpi, ...).
  std::vector<Rational> stratum_label_orders;

  Rational order_sum() const {
    Rational s(0);
    for (const auto& o : cone_orders) s += o;
    return s;
  }
  bool gauss_bonnet_holds() const { return order_sum() == Rational(2 * genus - 2); }
  bool stratum_label_matches() const { return stratum_label_orders == cone_orders; }
};

inline SingularityProfile singularity_profile(const SurfaceParams& sp) {
  SingularityProfile prof{sp, 0, 0, 0, Rational(0), Rational(0), {}, {}, {}};
  const int k = sp.k, ell = sp.ell, varpi = sp.varpi();
  prof.genus = ell * k + 1 - k - (ell + varpi) / 2;
  prof.m_points = ell;
  prof.a_points = varpi;
  prof.m_angle_turns = Rational(k);
  prof.a_angle_turns = Rational(k * (ell - 2), varpi);
  for (int j = 0; j < ell; ++j) prof.points.push_back({'M', prof.m_angle_turns, prof.m_angle_turns - Rational(1)});
  for (int j = 0; j < varpi; ++j) prof.points.push_back({'A', prof.a_angle_turns, prof.a_angle_turns - Rational(1)});
  for (const auto& pt : prof.points) prof.cone_orders.push_back(pt.order);
  for (int j = 0; j < ell; ++j) prof.stratum_label_orders.emplace_back(k - 1);
  for (int j = 0; j < varpi; ++j) prof.stratum_label_orders.emplace_back(k * (ell - 2 - varpi), varpi);
  return prof;
}

/// Coefficients of sum_i c_i V_i(p), i in Z_{2k}.
template <typename T>
struct CycleCoefficients {
  int p = 0;
  std::vector<T> coeffs;
};

namespace detail {

template <typename T>
void require_absolute(const CycleCoefficients<T>& c, int k) {
  if (c.coeffs.size() != static_cast<std::size_t>(2 * k)) throw InvalidArgument("cycle needs 2k coefficients");
  T s(0);
  for (const auto& x : c.coeffs) s = s + x;
  if (!is_zero_of(s)) throw NonAbsoluteCycle("coefficient sum is nonzero");
}

}  // namespace detail

/// omega(sum a_i V_i(a.p), sum b_i V_i(b.p)) from the closed forms over
/// 1 <= i <= i' < 2k. Pairs with a.p < b.p use antisymmetry.
template <typename T>
T intersection_pairing(const CycleCoefficients<T>& a, const CycleCoefficients<T>& b, const SurfaceParams& sp) {
  detail::require_absolute(a, sp.k);
  detail::require_absolute(b, sp.k);
  if (a.p < b.p) return -intersection_pairing(b, a, sp);
  const std::size_t n = static_cast<std::size_t>(2 * sp.k);
  // running prefix sums over i in [1, i']
  T pa(0), pb(0), total(0);
  for (std::size_t ip = 1; ip < n; ++ip) {
    pa = pa + a.coeffs[ip];
    pb = pb + b.coeffs[ip];
    if (a.p == b.p) {
      total = total + pa * b.coeffs[ip] - a.coeffs[ip] * pb;
    } else {
      total = total + pa * b.coeffs[ip];
    }
  }
  return total;
}

/// Raw and rescaled Hodge-form data on the span of Z(p) = sum_i x_i V_i(p),
/// x_i = cos(2 pi r i / 2k), p in A_{l-1}.
struct HodgeForm {
  SurfaceParams params;
  int r = 1;
  int conductor = 4;                // lcm(2k, 4)
  CyclotomicNumber sin_theta;       // sin(pi r / k)
  CyclotomicNumber raw_diagonal;    // <Z(p), Z(p)>
  ExactMatrix omega;                // omega(Z(p), Z(p'))
  ExactMatrix omega_shift;          // omega(1_{2k} Z(p), Z(p'))
  ExactMatrix raw;                  // <Z(p), Z(p')>, linear in the first slot
  HermitianGram rescaled;           // raw / raw_diagonal, unit diagonal
};

/// Builds the Hermitian form with imaginary part omega:
///   Re<v,w> = (omega(1v, w) + omega(1w, v)) / (2 sin(pi r/k)),  Im<v,w> = omega(v, w).
/// Both parts are computed from intersection_pairing on the x_i coefficients.
inline HodgeForm hodge_gram(const SurfaceParams& sp, int r) {
  const int k = sp.k;
  if (r % k == 0) throw DegenerateAngle("sin(pi r/k) vanishes for r = " + std::to_string(r));
  if (r < 0 || r > k) throw InvalidArgument("r must satisfy 0 < r < k");
  const int L = std::lcm(2 * k, 4);
  const auto n = static_cast<std::size_t>(2 * k);
  const CyclotomicNumber half = CyclotomicNumber(Rational(1, 2));
  const CyclotomicNumber rho = root_of_unity(L, static_cast<std::int64_t>(r) * (L / (2 * k)));
  const CyclotomicNumber i_unit = root_of_unity(L, L / 4);

  std::vector<CyclotomicNumber> x(n), shifted(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (rho.pow(static_cast<std::int64_t>(i)) + rho.pow(-static_cast<std::int64_t>(i))) * half;
  for (std::size_t i = 0; i < n; ++i) shifted[i] = x[(i + n - 1) % n];  // 1_{2k} V_i = V_{i+1}

  HodgeForm out{sp, r, L, {}, {}, {}, {}, {}, {}};
  out.sin_theta = (rho - rho.inverse()) / (CyclotomicNumber(2) * i_unit);

  const Alphabet A(sp.d());
  const std::size_t d = static_cast<std::size_t>(sp.d());
  out.omega = ExactMatrix(d, d);
  out.omega_shift = ExactMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const int pa = A.letter(a), pb = A.letter(b);
      out.omega(a, b) = intersection_pairing<CyclotomicNumber>({pa, x}, {pb, x}, sp);
      out.omega_shift(a, b) = intersection_pairing<CyclotomicNumber>({pa, shifted}, {pb, x}, sp);
    }
  }
  const CyclotomicNumber two_sin = CyclotomicNumber(2) * out.sin_theta;
  out.raw = ExactMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      CyclotomicNumber re = (out.omega_shift(a, b) + out.omega_shift(b, a)) / two_sin;
      out.raw(a, b) = re + i_unit * out.omega(a, b);
    }
  }
  out.raw_diagonal = out.raw(0, 0);
  const CyclotomicNumber scale = out.raw_diagonal.inverse();
  out.rescaled.entries = scale * out.raw;
  return out;
}

}  // namespace kzlab

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "kzlab/errors.hpp"
#include "kzlab/number/cyclotomic.hpp"
#include "kzlab/number/rational.hpp"

namespace kzlab {

/// The parameter alpha in (0, 1/2) together with rho = exp(2 pi i alpha) and
/// zeta = rho^{-1} as exact cyclotomic numbers.
///
/// Writing alpha = a/b in lowest terms, rho = zeta_b^a lives in Q(zeta_b), so
/// the conductor is b. The same alpha is also available as r/2k with the
/// smallest such k (r = a, k = b/2 for even b; r = 2a, k = b for odd b).
class AlphaParam {
 public:
  AlphaParam(std::int64_t num, std::int64_t den) : value_(num, den) {
    if (!value_.is_small() || value_.sign() <= 0 || !(value_ < Rational(1, 2))) {
      throw InvalidArgument("alpha must lie strictly between 0 and 1/2, got " + value_.to_string());
    }
    a_ = value_.num();
    b_ = value_.den();
    if (b_ % 2 == 0) {
      r_ = a_;
      k_ = b_ / 2;
    } else {
      r_ = 2 * a_;
      k_ = b_;
    }
  }

  explicit AlphaParam(const Rational& q) : AlphaParam(checked_small(q).num(), q.den()) {}

  /// Parses "a/b". Decimal or symbolic input has no exact cyclotomic value
  /// and is rejected with InexactInput.
  static AlphaParam parse(std::string_view text) {
    if (text.find('/') == std::string_view::npos) {
      throw InexactInput("alpha must be an exact fraction a/b, got '" + std::string(text) + "'");
    }
    return AlphaParam(Rational::parse(text));
  }

  /// alpha = r/(2k).
  static AlphaParam from_rk(std::int64_t r, std::int64_t k) { return AlphaParam(r, 2 * k); }

  const Rational& value() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return a_; }
  std::int64_t denominator() const noexcept { return b_; }
  int conductor() const noexcept { return static_cast<int>(b_); }
  std::int64_t r() const noexcept { return r_; }
  std::int64_t k() const noexcept { return k_; }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

  CyclotomicNumber rho() const { return root_of_unity(conductor(), a_); }
  CyclotomicNumber zeta() const { return root_of_unity(conductor(), -a_); }
  /// rho^n as an exact number.
  CyclotomicNumber rho_pow(std::int64_t n) const { return root_of_unity(conductor(), a_ * n); }

  /// 2 cos(2 pi alpha) = rho + rho^{-1}.
  CyclotomicNumber two_cos() const { return rho() + zeta(); }

  /// True when n * alpha is an integer.
  bool multiple_is_integer(std::int64_t n) const { return (n * a_) % b_ == 0; }

  friend bool operator==(const AlphaParam& x, const AlphaParam& y) { return x.value_ == y.value_; }

 private:
  static const Rational& checked_small(const Rational& q) {
    if (!q.is_small()) throw InvalidArgument("alpha numerator/denominator too large");
    return q;
  }

  Rational value_;
  std::int64_t a_ = 0, b_ = 1, r_ = 0, k_ = 1;
};

}  // namespace kzlab

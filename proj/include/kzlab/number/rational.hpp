#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "kzlab/errors.hpp"

namespace kzlab {

/// Exact rational number with arbitrary-precision fallback.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger is promoted to a boost::multiprecision rational and
/// demoted again as soon as it fits. The representation is canonical
/// (gcd(num, den) = 1, den > 0) in both regimes, so equality and hashing can
/// work on the stored fields.
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(static_cast<i128>(n), static_cast<i128>(d)); }

  explicit Rational(const Big& b) { assign_big(b); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<Big>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Big(BigInt(std::string(text))));
      BigInt n(std::string(text.substr(0, slash)));
      BigInt d(std::string(text.substr(slash + 1)));
      if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
      return Rational(Big(n, d));
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const Error*>(&e) != nullptr) throw;
      throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    }
  }

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? denominator(*big_) == 1 : den_ == 1; }
  int sign() const noexcept {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  /// Numerator/denominator; only meaningful when is_small().
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Big to_big() const { return big_ ? *big_ : Big(BigInt(num_), BigInt(den_)); }

  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (big_) {
      std::string s = numerator(*big_).str();
      if (denominator(*big_) != 1) s += "/" + denominator(*big_).str();
      return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  Rational operator-() const {
    if (big_) return Rational(Big(-*big_));
    if (num_ == INT64_MIN) return Rational(-to_big());
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
      }
      return from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(a.to_big() + b.to_big());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(s);
      }
      return from_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(a.to_big() - b.to_big());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &s)) return Rational(s);
      }
      return from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(a.to_big() * b.to_big());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    if (!a.big_ && !b.big_) {
      return from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    return Rational(a.to_big() / b.to_big());
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // canonical
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      i128 l = static_cast<i128>(a.num_) * b.den_;
      i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    Big l = a.to_big();
    Big r = b.to_big();
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    if (big_) return std::hash<std::string>{}(to_string());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(i128 n, i128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  static BigInt to_bigint(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigInt b = static_cast<std::uint64_t>(u >> 64);
    b <<= 64;
    b += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-b) : b;
  }

  void assign(i128 n, i128 d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
    u128 g = gcd128(an, static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_unique<Big>(to_bigint(n), to_bigint(d));
      num_ = 0;
      den_ = 1;
    }
  }

  void assign_big(const Big& b) {
    const BigInt& n = numerator(b);
    const BigInt& d = denominator(b);
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
      big_.reset();
    } else {
      big_ = std::make_unique<Big>(b);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

}  // namespace kzlab

template <>
struct std::hash<kzlab::Rational> {
  std::size_t operator()(const kzlab::Rational& r) const noexcept { return r.hash(); }
};

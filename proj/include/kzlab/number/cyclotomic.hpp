#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/number/rational.hpp"

namespace kzlab {

namespace detail {

using IntPoly = std::vector<std::int64_t>;  // low degree first

/// Exact quotient of integer polynomials; `den` must be monic.
inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw InvalidArgument("cyclotomic polynomial division is not exact");
  }
  return q;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Per-conductor tables: the cyclotomic polynomial, reduced powers of x and
/// floating-point roots. Instances live for the whole program.
struct FieldTables {
  int conductor = 1;
  int degree = 1;                    // phi(N)
  IntPoly cyclotomic;                // monic, size degree + 1
  std::vector<IntPoly> powers;       // x^e mod Phi_N for e in [0, N)
  std::vector<std::complex<double>> roots;  // exp(2 pi i e / N)
};

inline IntPoly cyclotomic_polynomial(int n) {
  IntPoly xn(static_cast<std::size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) xn = exact_divide(xn, cyclotomic_polynomial(d));
  }
  return xn;
}

inline std::unique_ptr<FieldTables> build_tables(int n) {
  auto t = std::make_unique<FieldTables>();
  t->conductor = n;
  t->cyclotomic = cyclotomic_polynomial(n);
  t->degree = static_cast<int>(t->cyclotomic.size()) - 1;
  const auto deg = static_cast<std::size_t>(t->degree);
  t->powers.reserve(static_cast<std::size_t>(n));
  IntPoly cur(deg, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    t->powers.push_back(cur);
    // multiply by x and reduce
    std::int64_t top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * t->cyclotomic[j];
    }
  }
  t->roots.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    double a = 2.0 * M_PI * e / n;
    t->roots.emplace_back(std::cos(a), std::sin(a));
  }
  return t;
}

inline const FieldTables& field_tables(int n) {
  if (n < 1) throw InvalidArgument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
  return *it->second;
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_N), stored by its coordinates in
/// the power basis 1, x, ..., x^(phi(N)-1) modulo the N-th cyclotomic
/// polynomial. Coordinates are always fully reduced, so two equal values of
/// the same conductor have identical coefficient vectors.
///
/// Operands of different conductors are embedded into Q(zeta_lcm) first.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}
  CyclotomicNumber(const Rational& q)  // NOLINT(google-explicit-constructor)
      : field_(&detail::field_tables(1)), coeffs_{q} {}
  CyclotomicNumber(std::int64_t v) : CyclotomicNumber(Rational(v)) {}  // NOLINT
  CyclotomicNumber(int v) : CyclotomicNumber(Rational(v)) {}           // NOLINT

  /// A rational constant viewed inside Q(zeta_N).
  static CyclotomicNumber constant(const Rational& q, int conductor) {
    CyclotomicNumber r(ConductorTag{}, conductor);
    r.coeffs_[0] = q;
    return r;
  }

  static CyclotomicNumber zero(int conductor) { return CyclotomicNumber(ConductorTag{}, conductor); }

  /// zeta_N^a, with a reduced modulo N.
  static CyclotomicNumber root_of_unity(int conductor, std::int64_t a) {
    CyclotomicNumber r(ConductorTag{}, conductor);
    const auto& t = *r.field_;
    auto e = static_cast<std::size_t>(((a % conductor) + conductor) % conductor);
    for (int j = 0; j < t.degree; ++j) r.coeffs_[static_cast<std::size_t>(j)] = Rational(t.powers[e][static_cast<std::size_t>(j)]);
    return r;
  }

  /// Builds from explicit power-basis coordinates (length phi(N)).
  static CyclotomicNumber from_coefficients(int conductor, std::vector<Rational> coeffs) {
    CyclotomicNumber r(ConductorTag{}, conductor);
    if (coeffs.size() != r.coeffs_.size()) throw InvalidArgument("coefficient vector has wrong length");
    r.coeffs_ = std::move(coeffs);
    return r;
  }

  int conductor() const noexcept { return field_->conductor; }
  int degree() const noexcept { return field_->degree; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  bool is_rational() const noexcept {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
      if (!coeffs_[j].is_zero()) return false;
    }
    return true;
  }

  /// The value as a rational; throws InvalidArgument when not rational.
  Rational to_rational() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic number is not rational");
    return coeffs_[0];
  }

  bool is_real() const { return *this == conj(); }

  /// Same value expressed in Q(zeta_M); M must be a multiple of the conductor.
  CyclotomicNumber embed(int target) const {
    const int n = conductor();
    if (target == n) return *this;
    if (target % n != 0) throw InvalidArgument("embedding target is not a multiple of the conductor");
    CyclotomicNumber r(ConductorTag{}, target);
    const auto& t = *r.field_;
    const int step = target / n;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j].is_zero()) continue;
      const auto& pw = t.powers[static_cast<std::size_t>(static_cast<int>(j) * step % target)];
      r.add_scaled_int(pw, coeffs_[j]);
    }
    return r;
  }

  /// Complex conjugation zeta -> zeta^{-1}.
  CyclotomicNumber conj() const { return galois(-1); }

  /// The automorphism zeta_N -> zeta_N^t, t coprime to N.
  CyclotomicNumber galois(std::int64_t t) const {
    const int n = conductor();
    if (n > 1 && std::gcd(static_cast<std::int64_t>(n), t) != 1) {
      throw InvalidArgument("Galois exponent must be coprime to the conductor");
    }
    CyclotomicNumber r(ConductorTag{}, n);
    const auto& tab = *field_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j].is_zero()) continue;
      auto e = ((static_cast<std::int64_t>(j) * t) % n + n) % n;
      r.add_scaled_int(tab.powers[static_cast<std::size_t>(e)], coeffs_[j]);
    }
    return r;
  }

  std::complex<double> approx_complex() const {
    std::complex<double> s = 0.0;
    const auto& t = *field_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (!coeffs_[j].is_zero()) s += coeffs_[j].to_double() * t.roots[j];
    }
    return s;
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_ != b.field_) {
      int m = std::lcm(a.conductor(), b.conductor());
      return a.embed(m) + b.embed(m);
    }
    CyclotomicNumber r = a;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[j] += b.coeffs_[j];
    }
    return r;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_ != b.field_) {
      int m = std::lcm(a.conductor(), b.conductor());
      return a.embed(m) - b.embed(m);
    }
    CyclotomicNumber r = a;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[j] -= b.coeffs_[j];
    }
    return r;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_ != b.field_) {
      // rational scalars do not need the full embedding
      if (a.conductor() == 1) return b.scaled(a.coeffs_[0]);
      if (b.conductor() == 1) return a.scaled(b.coeffs_[0]);
      int m = std::lcm(a.conductor(), b.conductor());
      return a.embed(m) * b.embed(m);
    }
    const auto deg = a.coeffs_.size();
    std::vector<Rational> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    const auto& cyc = a.field_->cyclotomic;
    for (std::size_t e = prod.size(); e-- > deg;) {
      if (prod[e].is_zero()) continue;
      Rational c = prod[e];
      for (std::size_t j = 0; j < deg; ++j) {
        if (cyc[j] != 0) prod[e - deg + j] -= c * Rational(cyc[j]);
      }
      prod[e] = Rational(0);
    }
    prod.resize(deg);
    CyclotomicNumber r(a.field_);
    r.coeffs_ = std::move(prod);
    return r;
  }

  CyclotomicNumber scaled(const Rational& q) const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) {
      if (!c.is_zero()) c *= q;
    }
    return r;
  }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  CyclotomicNumber inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (is_rational()) return constant(Rational(1) / coeffs_[0], conductor());
    const auto deg = coeffs_.size();
    // columns: x^j * this, reduced; solve M y = e_0
    std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
    CyclotomicNumber col = *this;
    CyclotomicNumber x = root_of_unity(conductor(), 1);
    for (std::size_t j = 0; j < deg; ++j) {
      for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
      col = col * x;
    }
    m[0][deg] = Rational(1);
    for (std::size_t c = 0; c < deg; ++c) {
      std::size_t piv = c;
      while (piv < deg && m[piv][c].is_zero()) ++piv;
      if (piv == deg) throw DivisionByZero("singular multiplication matrix");
      std::swap(m[piv], m[c]);
      Rational inv = Rational(1) / m[c][c];
      for (std::size_t k = c; k <= deg; ++k) m[c][k] *= inv;
      for (std::size_t i = 0; i < deg; ++i) {
        if (i == c || m[i][c].is_zero()) continue;
        Rational f = m[i][c];
        for (std::size_t k = c; k <= deg; ++k) {
          if (!m[c][k].is_zero()) m[i][k] -= f * m[c][k];
        }
      }
    }
    CyclotomicNumber r(field_);
    for (std::size_t i = 0; i < deg; ++i) r.coeffs_[i] = m[i][deg];
    return r;
  }

  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (b.conductor() == 1) {
      if (b.coeffs_[0].is_zero()) throw DivisionByZero("division by zero");
      return a.scaled(Rational(1) / b.coeffs_[0]);
    }
    return a * b.inverse();
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this = *this / o; }

  CyclotomicNumber pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber result = constant(Rational(1), conductor());
    CyclotomicNumber base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    int m = std::lcm(a.conductor(), b.conductor());
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
  }

  /// Hash of the coordinate vector. Consistent with == among values sharing
  /// a conductor (the setting of group enumeration).
  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(conductor());
    for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
    return h;
  }

  /// "[c0, c1, ...]" over the power basis, e.g. "[1/2, -1]".
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (j == 0) {
        os << coeffs_[j];
      } else {
        if (!coeffs_[j].is_one()) os << "(" << coeffs_[j] << ")*";
        os << "z" << conductor();
        if (j > 1) os << "^" << j;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

 private:
  struct ConductorTag {};
  CyclotomicNumber(ConductorTag, int conductor) : CyclotomicNumber(&detail::field_tables(conductor)) {}
  explicit CyclotomicNumber(const detail::FieldTables* f)
      : field_(f), coeffs_(static_cast<std::size_t>(f->degree)) {}

  void add_scaled_int(const detail::IntPoly& v, const Rational& s) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (v[j] != 0) coeffs_[j] += s * Rational(v[j]);
    }
  }

  const detail::FieldTables* field_;
  std::vector<Rational> coeffs_;
};

inline CyclotomicNumber root_of_unity(int conductor, std::int64_t a) {
  return CyclotomicNumber::root_of_unity(conductor, a);
}

inline std::complex<double> approx_complex(const CyclotomicNumber& x) { return x.approx_complex(); }

/// Integer combination of N-th roots of unity kept unreduced (an element of
/// the group ring Z[Z_N]). Sums of many products of roots reduce only once.
class RootSum {
 public:
  explicit RootSum(int conductor) : n_(conductor), c_(static_cast<std::size_t>(conductor), 0) {
    if (conductor < 1) throw InvalidArgument("conductor must be positive");
  }

  int conductor() const noexcept { return n_; }

  void add_root(std::int64_t exponent, std::int64_t multiplicity = 1) {
    c_[static_cast<std::size_t>(((exponent % n_) + n_) % n_)] += multiplicity;
  }

  /// Adds multiplicity * (sum over a) * (sum over b) with a, b in
  /// exponent lists; used for products of characters.
  const std::vector<std::int64_t>& raw() const noexcept { return c_; }

  CyclotomicNumber reduce() const {
    const auto& t = detail::field_tables(n_);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(t.degree), 0);
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (c_[e] == 0) continue;
      const auto& pw = t.powers[e];
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += c_[e] * pw[j];
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(acc.size());
    for (auto v : acc) coeffs.emplace_back(v);
    return CyclotomicNumber::from_coefficients(n_, std::move(coeffs));
  }

 private:
  int n_;
  std::vector<std::int64_t> c_;
};

}  // namespace kzlab

template <>
struct std::hash<kzlab::CyclotomicNumber> {
  std::size_t operator()(const kzlab::CyclotomicNumber& x) const noexcept { return x.hash(); }
};

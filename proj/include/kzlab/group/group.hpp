#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/number/cyclotomic.hpp"
#include "kzlab/surface/surface.hpp"

namespace kzlab {

inline int mod(std::int64_t a, std::int64_t n) { return static_cast<int>(((a % n) + n) % n); }

/// Element of G acting on Z_{2k} x Z_l by x -> (i, j) + x, or by
/// x -> (i, j) - x when flip is set. The involution sigma is (1, 0, flip).
struct GroupElement {
  int i = 0;
  int j = 0;
  bool flip = false;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class SurfaceGroup {
 public:
  SurfaceGroup(int k, int ell) : k_(k), ell_(ell) { SurfaceParams check(k, ell); }

  int k() const noexcept { return k_; }
  int ell() const noexcept { return ell_; }
  int two_k() const noexcept { return 2 * k_; }
  int order() const noexcept { return 4 * k_ * ell_; }

  GroupElement identity() const { return {0, 0, false}; }
  GroupElement sigma() const { return {1, 0, true}; }
  GroupElement one_2k() const { return {mod(1, two_k()), 0, false}; }
  GroupElement one_ell() const { return {0, 1, false}; }

  /// g o h
  GroupElement compose(const GroupElement& g, const GroupElement& h) const {
    const int s = g.flip ? -1 : 1;
    return {mod(g.i + s * h.i, two_k()), mod(g.j + s * h.j, ell_), g.flip != h.flip};
  }

  GroupElement inverse(const GroupElement& g) const {
    if (g.flip) return g;
    return {mod(-g.i, two_k()), mod(-g.j, ell_), false};
  }

  GroupElement power(const GroupElement& g, std::int64_t t) const {
    if (g.flip) return (mod(t, 2) == 0) ? identity() : g;
    return {mod(g.i * t, two_k()), mod(g.j * t, ell_), false};
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (int f = 0; f < 2; ++f)
      for (int i = 0; i < two_k(); ++i)
        for (int j = 0; j < ell_; ++j) out.push_back({i, j, f == 1});
    return out;
  }

 private:
  int k_, ell_;
};

struct ConjugacyClass {
  GroupElement representative;
  std::vector<GroupElement> members;
  std::size_t size() const { return members.size(); }
};

/// Classes by brute-force conjugation; the representative is the least member.
inline std::vector<ConjugacyClass> conjugacy_classes(int k, int ell) {
  SurfaceGroup G(k, ell);
  auto elems = G.elements();
  std::set<GroupElement> seen;
  std::vector<ConjugacyClass> classes;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    std::set<GroupElement> cls;
    for (const auto& g : elems) cls.insert(G.compose(G.compose(g, x), G.inverse(g)));
    seen.insert(cls.begin(), cls.end());
    classes.push_back({*cls.begin(), std::vector<GroupElement>(cls.begin(), cls.end())});
  }
  return classes;
}

/// Integer combination of Pi-th roots of unity, unreduced. Character values
/// of G are all of this shape, which keeps orthogonality sums exact and cheap.
struct RootCombo {
  std::vector<std::pair<int, std::int64_t>> terms;  // (exponent mod Pi, multiplicity)

  static RootCombo integer(std::int64_t v) { return RootCombo{{{0, v}}}; }

  CyclotomicNumber value(int Pi) const {
    RootSum acc(Pi);
    for (auto [e, m] : terms) acc.add_root(e, m);
    return acc.reduce();
  }
};

/// Irreducible character of G stored per conjugacy class.
struct Character {
  std::string name;
  int dim = 1;
  int r = -1, s = -1;  // set for the two-dimensional chi_{r,s}
  std::vector<RootCombo> values;
};

struct CharacterTable {
  int k = 1, ell = 3, Pi = 6;
  std::vector<ConjugacyClass> classes;
  std::vector<Character> rows;

  /// (1/|G|) sum_g chi(g) chi'(g^{-1}); exact.
  CyclotomicNumber inner_product(std::size_t a, std::size_t b) const {
    // chi'(g^{-1}) = conj(chi'(g)) and every class is closed under inversion here
    RootSum acc(Pi);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto size = static_cast<std::int64_t>(classes[c].size());
      for (auto [e1, m1] : rows[a].values[c].terms)
        for (auto [e2, m2] : rows[b].values[c].terms) acc.add_root(e1 - e2, size * m1 * m2);
    }
    return acc.reduce() / CyclotomicNumber(4 * k * ell);
  }

  bool orthonormal() const {
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a; b < rows.size(); ++b)
        if (inner_product(a, b) != CyclotomicNumber(a == b ? 1 : 0)) return false;
    return true;
  }

  std::int64_t sum_of_squared_dims() const {
    std::int64_t s = 0;
    for (const auto& row : rows) s += static_cast<std::int64_t>(row.dim) * row.dim;
    return s;
  }
};

/// Exponent m with chi_{r,s}(i,j) = zeta_Pi^m + zeta_Pi^{-m}.
inline std::int64_t chi_exponent(int r, int s, int i, int j, int k, int ell) {
  const int Pi = SurfaceParams(k, ell).Pi();
  return static_cast<std::int64_t>(r) * i * (Pi / (2 * k)) + static_cast<std::int64_t>(s) * j * (Pi / ell);
}

inline RootCombo chi_rs_combo(int r, int s, const GroupElement& g, int k, int ell) {
  if (g.flip) return RootCombo{};
  const std::int64_t m = chi_exponent(r, s, g.i, g.j, k, ell);
  const int Pi = SurfaceParams(k, ell).Pi();
  return RootCombo{{{mod(m, Pi), 1}, {mod(-m, Pi), 1}}};
}

/// chi_{r,s}(g) = 2 cos 2 pi (ri/2k + sj/l) on translations, 0 on flips.
inline CyclotomicNumber character_value(int r, int s, const GroupElement& g, int k, int ell) {
  return chi_rs_combo(r, s, g, k, ell).value(SurfaceParams(k, ell).Pi());
}

/// One-dimensional character with 1_{2k} -> e1, 1_l -> e2, sigma -> es.
inline std::int64_t linear_character(int e1, int e2, int es, const GroupElement& g) {
  auto pw = [](int e, int n) { return (e == -1 && n % 2 != 0) ? -1 : 1; };
  if (!g.flip) return pw(e1, g.i) * pw(e2, g.j);
  // g = T_{(i-1, j)} o sigma
  return pw(e1, g.i - 1) * pw(e2, g.j) * es;
}

/// Points of R(2k, l) as the lexicographically least of (r,s), (-r,-s).
inline std::vector<std::pair<int, int>> r_set(int k, int ell, bool only_order_gt2) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < 2 * k; ++r) {
    for (int s = 0; s < ell; ++s) {
      std::pair<int, int> neg{mod(-r, 2 * k), mod(-s, ell)};
      if (neg < std::make_pair(r, s)) continue;
      if (only_order_gt2 && neg == std::make_pair(r, s)) continue;
      out.emplace_back(r, s);
    }
  }
  return out;
}

inline CharacterTable character_table(int k, int ell) {
  CharacterTable t;
  t.k = k;
  t.ell = ell;
  t.Pi = SurfaceParams(k, ell).Pi();
  t.classes = conjugacy_classes(k, ell);
  auto sign = [](int e) { return e > 0 ? '+' : '-'; };
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      if (e2 == -1 && ell % 2 != 0) continue;
      for (int es : {1, -1}) {
        Character ch;
        ch.name = std::string("lin(") + sign(e1) + sign(e2) + sign(es) + ")";
        for (const auto& c : t.classes) ch.values.push_back(RootCombo::integer(linear_character(e1, e2, es, c.representative)));
        t.rows.push_back(std::move(ch));
      }
    }
  }
  for (auto [r, s] : r_set(k, ell, true)) {
    Character ch;
    ch.name = "chi(" + std::to_string(r) + "," + std::to_string(s) + ")";
    ch.dim = 2;
    ch.r = r;
    ch.s = s;
    for (const auto& c : t.classes) ch.values.push_back(chi_rs_combo(r, s, c.representative, k, ell));
    t.rows.push_back(std::move(ch));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Permutation characters computed by counting fixed points of the action on
// the combinatorial pieces of M_{k,l}. They serve as the independent side of
// the homology character identities.

namespace detail {

/// Fixed points of x -> a +- x on the half-integers mod n (doubled: odd X mod 2n).
inline int half_integer_fixed_points(int a, bool flip, int n) {
  int count = 0;
  for (int X = 1; X < 2 * n; X += 2) {
    int image = flip ? mod(2 * a - X, 2 * n) : mod(X + 2 * a, 2 * n);
    if (image == X) ++count;
  }
  return count;
}

}  // namespace detail

/// Character of the edge module Q^{Z'_{2k} x Z'_l} (half-integer edge labels).
inline std::int64_t chi_edges(const GroupElement& g, int k, int ell) {
  return static_cast<std::int64_t>(detail::half_integer_fixed_points(g.i, g.flip, 2 * k)) *
         detail::half_integer_fixed_points(g.j, g.flip, ell);
}

/// Character of Q^{Z_{2k}} with 1_{2k} e_i = e_{i+1}, sigma e_i = -e_{1-i}.
inline std::int64_t chi_faces(const GroupElement& g, int k) {
  int fixed = 0;
  for (int i = 0; i < 2 * k; ++i) {
    int image = g.flip ? mod(g.i - i, 2 * k) : mod(i + g.i, 2 * k);
    if (image == i) ++fixed;
  }
  return g.flip ? -fixed : fixed;
}

/// Character of Q with sigma acting by -1.
inline std::int64_t chi_sign(const GroupElement& g) { return g.flip ? -1 : 1; }

/// chi_rel from the exact sequence 0 -> Q -> Q^{Z_2k} -> Q^{edges} -> H_1(M, Sigma) -> 0.
inline std::int64_t chi_rel(const GroupElement& g, int k, int ell) {
  return chi_edges(g, k, ell) - chi_faces(g, k) + chi_sign(g);
}

/// Permutation character of the l points M(j'), j' half-integers mod l.
inline std::int64_t chi_sigma_m(const GroupElement& g, int ell) {
  return detail::half_integer_fixed_points(g.j, g.flip, ell);
}

/// Permutation character of the varpi points A(Delta), Delta = i - j mod varpi.
inline std::int64_t chi_sigma_a(const GroupElement& g, int k, int ell) {
  const int varpi = std::gcd(2 * k, ell);
  int fixed = 0;
  for (int c = 0; c < varpi; ++c) {
    int image = g.flip ? mod(g.i - g.j - c, varpi) : mod(c + g.i - g.j, varpi);
    if (image == c) ++fixed;
  }
  return fixed;
}

struct HomologyDecomposition {
  int k = 1, ell = 3;
  std::vector<std::pair<int, int>> summands;  // (r, s), 0 < r <= k, each of multiplicity 1
  std::map<int, int> hr_dims;
  int total_dim = 0;
  int genus = 0;
  bool ab_identity_holds = false;   // chi_rel - chi_SM - chi_SA + 1 == sum of chi_{r,s}, pointwise
  bool rel_identity_holds = false;  // chi_rel == 1 (+ chi_+ + chi_-) + sum_{s != 0} chi_{r,s}, pointwise
  std::int64_t chi_ab_identity = 0;
};

/// Decomposes H_1(M_{k,l}, Q) into the pi_{r,s} and checks the character
/// identities on every element of G.
inline HomologyDecomposition decompose_homology(int k, int ell) {
  SurfaceParams sp(k, ell);
  SurfaceGroup G(k, ell);
  const int Pi = sp.Pi();
  HomologyDecomposition hd;
  hd.k = k;
  hd.ell = ell;
  hd.genus = singularity_profile(sp).genus;

  for (int r = 1; r <= k; ++r) {
    for (int s = 1; s < ell; ++s) {
      // r/2k + s/l is an integer iff r*l + 2k*s == 2k*l
      if (r * ell + 2 * k * s == 2 * k * ell) continue;
      if (r == k && 2 * s >= ell) continue;  // (k, s) ~ (k, -s)
      hd.summands.emplace_back(r, s);
      hd.hr_dims[r] += 2;
    }
  }
  for (auto& [r, dim] : hd.hr_dims) hd.total_dim += dim;

  std::vector<std::pair<int, int>> rel_support;
  for (auto [r, s] : r_set(k, ell, true))
    if (s != 0) rel_support.emplace_back(r, s);

  hd.ab_identity_holds = true;
  hd.rel_identity_holds = true;
  for (const auto& g : G.elements()) {
    const std::int64_t rel = chi_rel(g, k, ell);
    const std::int64_t ab = rel - chi_sigma_m(g, ell) - chi_sigma_a(g, k, ell) + 1;
    if (g == G.identity()) hd.chi_ab_identity = ab;

    RootSum sum_ab(Pi);
    for (auto [r, s] : hd.summands)
      for (auto [e, m] : chi_rs_combo(r, s, g, k, ell).terms) sum_ab.add_root(e, m);
    if (sum_ab.reduce() != CyclotomicNumber(ab)) hd.ab_identity_holds = false;

    RootSum sum_rel(Pi);
    sum_rel.add_root(0, 1);
    if (ell % 2 == 0) {
      sum_rel.add_root(0, linear_character(1, -1, -1, g));   // chi_+
      sum_rel.add_root(0, linear_character(-1, -1, -1, g));  // chi_-
    }
    for (auto [r, s] : rel_support)
      for (auto [e, m] : chi_rs_combo(r, s, g, k, ell).terms) sum_rel.add_root(e, m);
    if (sum_rel.reduce() != CyclotomicNumber(rel)) hd.rel_identity_holds = false;
  }
  return hd;
}

// ---------------------------------------------------------------------------
// Galois action of (Z_Pi)^* on R(2k, l).

inline std::vector<int> units_mod(int n) {
  std::vector<int> u;
  for (int t = 1; t <= n; ++t)
    if (std::gcd(t, n) == 1) u.push_back(t % n);
  return u;
}

/// Orbits of t.(r,s) = (tr, ts) on R(2k,l), each sorted, in order of first element.
inline std::vector<std::vector<std::pair<int, int>>> galois_orbits(int k, int ell) {
  SurfaceParams sp(k, ell);
  const auto units = units_mod(sp.Pi());
  auto canon = [&](int r, int s) {
    std::pair<int, int> a{mod(r, 2 * k), mod(s, ell)}, b{mod(-r, 2 * k), mod(-s, ell)};
    return std::min(a, b);
  };
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (auto rs : r_set(k, ell, false)) {
    if (seen.count(rs)) continue;
    std::set<std::pair<int, int>> orb;
    for (int t : units) orb.insert(canon(t * rs.first, t * rs.second));
    seen.insert(orb.begin(), orb.end());
    orbits.emplace_back(orb.begin(), orb.end());
  }
  return orbits;
}

struct PrimeBlockCount {
  int p, A, B, C, a, b;
  int brute_force;  // orbits of (Z_{p^C})^* on pairs with orders (p^a, p^b)
  int formula;      // 1 if min(a,b) == 0, else p^{min(a,b)-1}(p-1)
};

/// Per prime p | Pi, compares the brute-force orbit count on
/// Z_{p^A} x Z_{p^B} (orders p^a, p^b) with the closed formula.
inline std::vector<PrimeBlockCount> prime_block_orbit_counts(int k, int ell) {
  auto valuation = [](int n, int p) {
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  auto ipow = [](int p, int e) {
    int v = 1;
    while (e-- > 0) v *= p;
    return v;
  };
  auto order_exp = [&](int x, int p, int E) {  // order of x in Z_{p^E} as exponent
    int n = ipow(p, E);
    int ord = n / std::gcd(x, n);
    return valuation(ord, p);
  };
  std::vector<PrimeBlockCount> out;
  const int Pi = SurfaceParams(k, ell).Pi();
  int rest = Pi;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    const int A = valuation(2 * k, p), B = valuation(ell, p), C = std::max(A, B);
    const int pa = ipow(p, A), pb = ipow(p, B), pc = ipow(p, C);
    const auto units = units_mod(pc);
    for (int a = 0; a <= A; ++a) {
      for (int b = 0; b <= B; ++b) {
        std::set<std::pair<int, int>> seen;
        int orbits = 0;
        for (int r = 0; r < pa; ++r) {
          for (int s = 0; s < pb; ++s) {
            if (order_exp(r, p, A) != a || order_exp(s, p, B) != b) continue;
            if (seen.count({r, s})) continue;
            ++orbits;
            for (int t : units) seen.insert({t * r % pa, t * s % pb});
          }
        }
        const int m = std::min(a, b);
        const int formula = m == 0 ? 1 : ipow(p, m - 1) * (p - 1);
        out.push_back({p, A, B, C, a, b, orbits, formula});
      }
    }
  }
  return out;
}

/// H_r is defined over Q iff r/2k is one of 1/6, 1/4, 1/3, 1/2.
inline bool hr_is_rational(int k, int r) {
  if (k < 1 || r <= 0 || r > k) throw InvalidArgument("need 0 < r <= k");
  Rational q(r, 2 * k);
  return q == Rational(1, 6) || q == Rational(1, 4) || q == Rational(1, 3) || q == Rational(1, 2);
}

/// Galois-side test: every t in (Z_Pi)^* sends r to +-r mod 2k, so the
/// support of H_r is a union of orbits.
inline bool hr_galois_stable(int k, int ell, int r) {
  for (int t : units_mod(SurfaceParams(k, ell).Pi())) {
    int tr = mod(static_cast<std::int64_t>(t) * r, 2 * k);
    if (tr != mod(r, 2 * k) && tr != mod(-r, 2 * k)) return false;
  }
  return true;
}

}  // namespace kzlab

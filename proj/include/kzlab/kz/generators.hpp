#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/alphabet.hpp"
#include "kzlab/errors.hpp"
#include "kzlab/linalg/hermitian.hpp"
#include "kzlab/linalg/matrix.hpp"
#include "kzlab/number/alpha.hpp"

namespace kzlab {

enum class GeneratorKind { top, bottom };

inline char kind_letter(GeneratorKind k) { return k == GeneratorKind::top ? 't' : 'b'; }

/// L_p^t (or L_p^b) on C^{A_d}, basis ascending. Column q holds the image of e_q.
inline ExactMatrix build_generator(int d, const AlphaParam& alpha, int p, GeneratorKind kind) {
  Alphabet A(d);
  A.check(p);
  const int N = alpha.conductor();
  const CyclotomicNumber z = kind == GeneratorKind::top ? alpha.zeta() : alpha.rho();
  const auto n = static_cast<std::size_t>(d);
  ExactMatrix L(n, n, CyclotomicNumber::zero(N));
  const std::size_t ip = A.index(p);
  for (std::size_t c = 0; c < n; ++c) {
    const int q = A.letter(c);
    if (q == p) {
      L(ip, c) = -z;
      continue;
    }
    L(c, c) = CyclotomicNumber::constant(1, N);
    // the top generator pays zeta on letters below p; the bottom one mirrors the order
    const bool pays = kind == GeneratorKind::top ? q < p : q > p;
    L(ip, c) = pays ? -z : CyclotomicNumber::constant(-1, N);
  }
  return L;
}

struct GeneratorSet {
  int d = 2;
  AlphaParam alpha;
  std::vector<int> letters;      // ascending
  std::vector<ExactMatrix> top;  // top[i] = L^t_{letters[i]}
  std::vector<ExactMatrix> bottom;
  std::vector<Eigen::MatrixXcd> top_float;
  std::vector<Eigen::MatrixXcd> bottom_float;

  const ExactMatrix& get(int p, GeneratorKind kind) const {
    Alphabet(d).check(p);
    const auto i = Alphabet(d).index(p);
    return kind == GeneratorKind::top ? top[i] : bottom[i];
  }
  /// All 2d matrices, tops first.
  std::vector<ExactMatrix> all() const {
    auto out = top;
    out.insert(out.end(), bottom.begin(), bottom.end());
    return out;
  }
};

inline GeneratorSet build_generators(int d, const AlphaParam& alpha) {
  GeneratorSet g{d, alpha, Alphabet(d).letters(), {}, {}, {}, {}};
  for (int p : g.letters) {
    g.top.push_back(build_generator(d, alpha, p, GeneratorKind::top));
    g.bottom.push_back(build_generator(d, alpha, p, GeneratorKind::bottom));
    g.top_float.push_back(g.top.back().to_eigen());
    g.bottom_float.push_back(g.bottom.back().to_eigen());
  }
  return g;
}

/// The invariant form Q_alpha: unit diagonal, c = (1+zeta)^{-1} above the
/// diagonal and conj(c) below, antilinear in the first slot.
inline HermitianGram build_form(int d, const AlphaParam& alpha) {
  const int N = alpha.conductor();
  const auto n = static_cast<std::size_t>(d);
  const CyclotomicNumber c = (CyclotomicNumber::constant(1, N) + alpha.zeta()).inverse();
  const CyclotomicNumber cb = c.conj();
  ExactMatrix G(n, n, CyclotomicNumber::zero(N));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) G(i, j) = i == j ? CyclotomicNumber::constant(1, N) : (i < j ? c : cb);
  }
  return HermitianGram{std::move(G), std::nullopt, std::nullopt};
}

/// The same form with c placed in the other triangle; used to show that only
/// one placement is invariant.
inline HermitianGram build_form_transposed(int d, const AlphaParam& alpha) {
  auto q = build_form(d, alpha);
  q.entries = q.entries.transpose();
  return q;
}

struct FormDiagonalization {
  int d = 2;
  int ell = 3;
  std::vector<int> s_values;                           // 1..d
  std::vector<std::vector<CyclotomicNumber>> vectors;  // w_s, coordinates ascending
  std::vector<CyclotomicNumber> eigenvalues;           // Q(w_s, w_s), exact
  std::vector<double> eigenvalues_float;
  std::vector<double> predicted;                       // (l/2)(1 - tan(pi a) cot(pi s / l))
  bool orthogonal = true;                              // Q(w_s, w_s') = 0 for s != s'
  Signature signature;
  std::vector<std::vector<CyclotomicNumber>> kernel;   // exact nullspace of Q
};

/// Simultaneous diagonalization of Q_alpha in the Fourier basis.
/// For the form built above the basis vector attached to s is
/// w_s(p) = xi^{-s w} with p = d-1-2w and xi = exp(2 pi i / l); this
/// orientation gives Q(w_s) = (l/2)(1 - tan(pi alpha) cot(pi s / l)).
inline FormDiagonalization diagonalize_form(int d, const AlphaParam& alpha) {
  FormDiagonalization out;
  out.d = d;
  out.ell = d + 1;
  const int ell = d + 1;
  const int N = std::lcm(alpha.conductor(), ell);
  auto Q = build_form(d, alpha);
  auto G = embed_matrix(Q.entries, N);
  HermitianGram QN{G, std::nullopt, std::nullopt};
  Alphabet A(d);
  for (int s = 1; s <= d; ++s) {
    std::vector<CyclotomicNumber> v(static_cast<std::size_t>(d));
    for (int p : A.letters()) {
      const int w = (d - 1 - p) / 2;
      v[A.index(p)] = root_of_unity(N, -static_cast<std::int64_t>(s) * w * (N / ell));
    }
    out.s_values.push_back(s);
    out.vectors.push_back(v);
  }
  for (std::size_t a = 0; a < out.vectors.size(); ++a) {
    auto ev = QN.evaluate(out.vectors[a], out.vectors[a]);
    out.eigenvalues.push_back(ev);
    out.eigenvalues_float.push_back(ev.approx_complex().real());
    const double s = out.s_values[a];
    out.predicted.push_back(0.5 * ell * (1.0 - std::tan(M_PI * alpha.to_double()) / std::tan(M_PI * s / ell)));
    for (std::size_t b = 0; b < out.vectors.size(); ++b) {
      if (a != b && !QN.evaluate(out.vectors[a], out.vectors[b]).is_zero()) out.orthogonal = false;
    }
  }
  for (const auto& ev : out.eigenvalues) {
    if (ev.is_zero()) {
      ++out.signature.n_zero;
    } else {
      (ev.approx_complex().real() < 0 ? out.signature.n_minus : out.signature.n_plus) += 1;
    }
  }
  out.kernel = Q.kernel();
  return out;
}

/// Signature predicted by the ceiling formula (n_minus, n_plus, n_zero).
inline Signature predicted_signature(int d, const AlphaParam& alpha) {
  const std::int64_t ell = d + 1, a = alpha.numerator(), b = alpha.denominator();
  auto ceil_div = [](std::int64_t x, std::int64_t y) { return x >= 0 ? (x + y - 1) / y : -((-x) / y); };
  Signature s;
  if ((ell * a) % b == 0) {
    s.n_zero = 1;
    s.n_minus = static_cast<int>(ell * a / b) - 1;
    s.n_plus = d - 1 - s.n_minus;
  } else {
    s.n_minus = static_cast<int>(ceil_div(ell * a - b, b));
    s.n_plus = static_cast<int>(ceil_div(ell * (b - a) - b, b));
  }
  return s;
}

struct LpEigenstructure {
  int p = 0;
  std::vector<CyclotomicNumber> functional;                 // f_p, H_p = ker f_p
  std::vector<std::vector<CyclotomicNumber>> hyperplane;    // basis of H_p
  CyclotomicNumber special_eigenvalue;                      // -zeta
  std::vector<CyclotomicNumber> special_vector;             // e_p
  std::vector<CyclotomicNumber> charpoly;                   // low degree first
  bool hyperplane_fixed = false;
  bool special_pair_holds = false;
  bool charpoly_matches = false;  // equals (x-1)^{d-1}(x+zeta)
};

/// L_p = Id - e_p f_p with f_p(x) = zeta sum_{q<=p} x_q + sum_{q>=p} x_q.
inline LpEigenstructure eigenstructure_Lp(int d, const AlphaParam& alpha, int p) {
  Alphabet A(d);
  A.check(p);
  const int N = alpha.conductor();
  const auto z = alpha.zeta();
  const auto one = CyclotomicNumber::constant(1, N);
  LpEigenstructure out;
  out.p = p;
  for (int q : A.letters()) {
    CyclotomicNumber c = CyclotomicNumber::zero(N);
    if (q <= p) c += z;
    if (q >= p) c += one;
    out.functional.push_back(c);
  }
  ExactMatrix row(1, static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < out.functional.size(); ++i) row(0, i) = out.functional[i];
  out.hyperplane = row.nullspace();
  const auto L = build_generator(d, alpha, p, GeneratorKind::top);
  out.hyperplane_fixed = out.hyperplane.size() == static_cast<std::size_t>(d - 1);
  for (const auto& v : out.hyperplane) {
    if (L.apply(v) != v) out.hyperplane_fixed = false;
  }
  out.special_eigenvalue = -z;
  out.special_vector.assign(static_cast<std::size_t>(d), CyclotomicNumber::zero(N));
  out.special_vector[A.index(p)] = one;
  auto image = L.apply(out.special_vector);
  std::vector<CyclotomicNumber> expect;
  for (const auto& x : out.special_vector) expect.push_back(out.special_eigenvalue * x);
  out.special_pair_holds = image == expect;
  out.charpoly = L.charpoly();
  // (x-1)^{d-1}(x+zeta), low degree first
  std::vector<CyclotomicNumber> target{z, one};
  for (int i = 0; i < d - 1; ++i) {
    std::vector<CyclotomicNumber> next(target.size() + 1, CyclotomicNumber::zero(N));
    for (std::size_t j = 0; j < target.size(); ++j) {
      next[j + 1] += target[j];
      next[j] -= target[j];
    }
    target = std::move(next);
  }
  out.charpoly_matches = out.charpoly == target;
  return out;
}

struct RestrictionData {
  int d = 3;
  int p = 0;
  ExactMatrix iota;                 // d x (d-1)
  bool intertwines = false;         // iota L'_q = L_{iota(q)} iota for all q, both kinds
  bool restricted_form_matches = false;
  std::optional<std::vector<CyclotomicNumber>> h_prime;  // generator of the Q-orthogonal of H_p
  bool h_prime_fixed_by_others = false;
  std::optional<std::vector<CyclotomicNumber>> w_p;      // isotropic generator when d*alpha is an integer
  bool w_p_isotropic = false;
  bool w_p_in_hyperplane = false;
};

inline int iota_letter(int q, int p) { return q < p ? q - 1 : q + 1; }

/// Embedding of C^{A_{d-1}} onto the coordinate hyperplane spanned by e_q, q != p.
inline RestrictionData restriction_embedding(int d, const AlphaParam& alpha, int p) {
  if (d < 3) throw InvalidArgument("restriction_embedding needs d >= 3");
  Alphabet A(d), B(d - 1);
  A.check(p);
  const int N = alpha.conductor();
  RestrictionData out;
  out.d = d;
  out.p = p;
  out.iota = ExactMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d - 1), CyclotomicNumber::zero(N));
  for (int q : B.letters()) out.iota(A.index(iota_letter(q, p)), B.index(q)) = CyclotomicNumber::constant(1, N);

  out.intertwines = true;
  for (int q : B.letters()) {
    for (auto kind : {GeneratorKind::top, GeneratorKind::bottom}) {
      auto lhs = out.iota * build_generator(d - 1, alpha, q, kind);
      auto rhs = build_generator(d, alpha, iota_letter(q, p), kind) * out.iota;
      if (!(lhs == rhs)) out.intertwines = false;
    }
  }
  const auto Q = build_form(d, alpha);
  const auto Qp = build_form(d - 1, alpha);
  out.restricted_form_matches = out.iota.conj_transpose() * Q.entries * out.iota == Qp.entries;

  const bool nondegenerate = !alpha.multiple_is_integer(d + 1);
  const bool dalpha_integer = alpha.multiple_is_integer(d);
  if (!nondegenerate && !dalpha_integer) {
    throw DegenerateConfiguration("Q is degenerate and d*alpha is not an integer; no distinguished line");
  }
  auto e_p = std::vector<CyclotomicNumber>(static_cast<std::size_t>(d), CyclotomicNumber::zero(N));
  e_p[A.index(p)] = CyclotomicNumber::constant(1, N);
  if (nondegenerate) {
    out.h_prime = Q.entries.solve(e_p);
    out.h_prime_fixed_by_others = true;
    for (int q : A.letters()) {
      if (q == p) continue;
      if (build_generator(d, alpha, q, GeneratorKind::top).apply(*out.h_prime) != *out.h_prime) {
        out.h_prime_fixed_by_others = false;
      }
    }
  }
  if (dalpha_integer) {
    auto ker = Qp.kernel();
    if (ker.size() != 1) throw DegenerateConfiguration("restricted form kernel is not a line");
    out.w_p = out.iota.apply(ker.front());
    out.w_p_isotropic = Q.evaluate(*out.w_p, *out.w_p).is_zero();
    out.w_p_in_hyperplane = (*out.w_p)[A.index(p)].is_zero();
  }
  return out;
}

enum class SpecialClass { finite_order, parabolic, hyperbolic, infinite_elliptic };

inline std::string to_string(SpecialClass c) {
  switch (c) {
    case SpecialClass::finite_order: return "finite-order";
    case SpecialClass::parabolic: return "parabolic";
    case SpecialClass::hyperbolic: return "hyperbolic";
    case SpecialClass::infinite_elliptic: return "infinite-elliptic";
  }
  return "?";
}

struct SpecialElementReport {
  explicit SpecialElementReport(const AlphaParam& a) : alpha(a) {}
  AlphaParam alpha;
  ExactMatrix matrix;  // L^b_{-1} L^t_1
  CyclotomicNumber trace;
  CyclotomicNumber det;
  bool trace_matches = false;  // trace = 1 - (rho + rho^{-1})
  SpecialClass classification = SpecialClass::infinite_elliptic;
  std::optional<int> order;    // set for finite order
};

inline SpecialElementReport special_element_d2(const AlphaParam& alpha) {
  SpecialElementReport r(alpha);
  r.matrix = build_generator(2, alpha, -1, GeneratorKind::bottom) * build_generator(2, alpha, 1, GeneratorKind::top);
  r.trace = r.matrix.trace();
  r.det = r.matrix.determinant();
  r.trace_matches = r.trace == CyclotomicNumber(1) - alpha.two_cos();
  const auto id = ExactMatrix::identity(2);
  auto power = r.matrix;
  for (int n = 1; n <= 12; ++n) {
    if (power == id) {
      r.order = n;
      break;
    }
    power = power * r.matrix;
  }
  const auto t = r.trace.approx_complex().real();
  if (r.order) {
    r.classification = SpecialClass::finite_order;
  } else if (r.trace == CyclotomicNumber(2) || r.trace == CyclotomicNumber(-2)) {
    r.classification = SpecialClass::parabolic;
  } else if (std::abs(t) > 2) {
    r.classification = SpecialClass::hyperbolic;
  } else {
    r.classification = SpecialClass::infinite_elliptic;
  }
  return r;
}

struct VectorFieldsReport {
  explicit VectorFieldsReport(const AlphaParam& a) : alpha(a) {}
  AlphaParam alpha;
  std::vector<CyclotomicNumber> s;  // s(0), s(1), s(2)
  std::vector<CyclotomicNumber> p;  // p(0), p(1), p(2)
  CyclotomicNumber determinant;     // det of rows (1, p(n), s(n))
  CyclotomicNumber predicted;       // (1 - zeta^3)(1 - rho^3)
  /// X(0), X(1), X(2) in floating point; empty when the special element is
  /// parabolic (a_+ = a_-).
  std::vector<Eigen::Matrix2cd> fields;
  std::complex<double> scale{0, 1};  // i for elliptic, 1 for hyperbolic
  std::vector<std::complex<double>> a_plus, a_minus;
};

/// X(n) = (c / (a_+ - a_-)) [[s, -2p], [2, -s]] in the basis (e_{-1}, e_1),
/// where v_pm(n) = a_pm(n) e_{-1} + e_1 are the eigenvectors of the conjugated
/// special element and X v_pm = pm c v_pm.
inline VectorFieldsReport vector_fields_d2(const AlphaParam& alpha) {
  VectorFieldsReport r(alpha);
  const int N = alpha.conductor();
  const auto rho = alpha.rho(), z = alpha.zeta();
  const auto one = CyclotomicNumber::constant(1, N);
  r.s.push_back(-one - rho + rho * rho);
  r.p.push_back(rho);
  for (int n = 0; n < 2; ++n) {
    const auto& sn = r.s.back();
    const auto& pn = r.p.back();
    auto s1 = -z * sn - CyclotomicNumber::constant(2, N);
    auto p1 = z * z * pn + z * sn + one;
    r.s.push_back(s1);
    r.p.push_back(p1);
  }
  ExactMatrix M(3, 3);
  for (std::size_t n = 0; n < 3; ++n) {
    M(n, 0) = one;
    M(n, 1) = r.p[n];
    M(n, 2) = r.s[n];
  }
  r.determinant = M.determinant();
  r.predicted = (one - z.pow(3)) * (one - rho.pow(3));

  auto sp = special_element_d2(alpha);
  if (sp.classification == SpecialClass::parabolic) return r;
  r.scale = sp.classification == SpecialClass::hyperbolic ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
  // eigenvalues of the special element, lambda_+ taken with positive imaginary
  // part (elliptic) or larger than 1 in modulus (hyperbolic)
  const auto tr = sp.trace.approx_complex();
  const auto root = std::sqrt(tr * tr - 4.0);
  std::complex<double> lp = (tr + root) / 2.0, lm = (tr - root) / 2.0;
  const bool swap = sp.classification == SpecialClass::hyperbolic ? std::abs(lp) < std::abs(lm) : lp.imag() < lm.imag();
  if (swap) std::swap(lp, lm);
  const auto rc = rho.approx_complex(), zc = z.approx_complex();
  std::complex<double> ap = -1.0 - rc * lp, am = -1.0 - rc * lm;
  for (std::size_t n = 0; n < 3; ++n) {
    const auto s = r.s[n].approx_complex();
    const auto p = r.p[n].approx_complex();
    Eigen::Matrix2cd X;
    X << s, -2.0 * p, 2.0, -s;
    r.fields.push_back((r.scale / (ap - am)) * X);
    r.a_plus.push_back(ap);
    r.a_minus.push_back(am);
    ap = -zc * ap - 1.0;
    am = -zc * am - 1.0;
  }
  return r;
}

}  // namespace kzlab

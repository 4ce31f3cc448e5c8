#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/kz/generators.hpp"
#include "kzlab/linalg/hermitian.hpp"
#include "kzlab/linalg/matrix.hpp"
#include "kzlab/number/alpha.hpp"

namespace kzlab {

struct GroupEnumeration {
  std::vector<ExactMatrix> generators;
  std::size_t bound = 0;
  std::optional<std::size_t> order;  // empty when the bound was exceeded
  std::vector<ExactMatrix> elements;

  bool exceeded() const noexcept { return !order.has_value(); }
};

/// Breadth-first closure of the monoid generated by `gens`. For a finite group
/// this is the group itself. Stops as soon as more than `bound` distinct
/// elements have been seen.
inline GroupEnumeration enumerate_group(const std::vector<ExactMatrix>& gens, std::size_t bound = 100000) {
  if (gens.empty()) throw InvalidArgument("enumerate_group needs at least one generator");
  if (bound < 1) throw InvalidArgument("enumeration bound must be at least 1");
  GroupEnumeration out;
  out.generators = gens;
  out.bound = bound;
  const auto n = gens.front().rows();
  std::unordered_set<ExactMatrix> seen;
  std::deque<std::size_t> queue;
  // every element is re-embedded into one common field so that equal
  // matrices have identical coefficient vectors and hashes
  int N = 1;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) N = std::lcm(N, g(i, j).conductor());
  const auto id = embed_matrix(ExactMatrix::identity(n), N);
  seen.insert(id);
  out.elements.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    const auto x = out.elements[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = embed_matrix(g * x, N);
      if (seen.insert(y).second) {
        if (seen.size() > bound) {
          out.elements.clear();
          return out;
        }
        out.elements.push_back(std::move(y));
        queue.push_back(out.elements.size() - 1);
      }
    }
  }
  out.order = out.elements.size();
  return out;
}

inline GroupEnumeration enumerate_group(const std::vector<Eigen::MatrixXcd>&, std::size_t = 100000) {
  throw InexactInput("floating-point generators have no canonical exact form; use exact (rational alpha) matrices");
}

/// The d = 2 group generated by L_{-1}^t and L_1^t.
inline GroupEnumeration enumerate_d2_group(const AlphaParam& alpha, std::size_t bound = 100000) {
  return enumerate_group({build_generator(2, alpha, -1, GeneratorKind::top), build_generator(2, alpha, 1, GeneratorKind::top)},
                         bound);
}

/// Orthonormal real basis (as columns) kept while spanning; vectors whose
/// residual falls below tol relative to their norm are rejected.
class RealSpan {
 public:
  explicit RealSpan(Eigen::Index dim, double tol = 1e-9) : dim_(dim), tol_(tol) {}

  bool add(const Eigen::VectorXd& v) {
    const double norm = v.norm();
    if (norm == 0.0) return false;
    Eigen::VectorXd r = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) r -= b.dot(r) * b;
    }
    if (r.norm() <= tol_ * std::max(1.0, norm)) return false;
    basis_.push_back(r / r.norm());
    return true;
  }
  std::size_t size() const noexcept { return basis_.size(); }
  Eigen::Index ambient() const noexcept { return dim_; }

 private:
  Eigen::Index dim_;
  double tol_;
  std::vector<Eigen::VectorXd> basis_;
};

inline Eigen::VectorXd realified_vector(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.size();
  Eigen::VectorXd v(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = m.data()[i].real();
    v(n + i) = m.data()[i].imag();
  }
  return v;
}

struct LieClosure {
  std::size_t closure_dim = 0;
  bool stabilized = false;
  int rounds = 0;
  std::vector<Eigen::MatrixXcd> basis;  // spanning elements in complex matrix form
};

/// Real Lie algebra generated by the seeds: brackets of all pairs are added
/// until the real dimension stays unchanged for two consecutive rounds.
inline LieClosure lie_closure_dim(const std::vector<Eigen::MatrixXcd>& seeds, int max_rounds = 64) {
  LieClosure out;
  if (seeds.empty()) {
    out.stabilized = true;
    return out;
  }
  const auto n = seeds.front().rows();
  for (const auto& s : seeds) {
    if (s.rows() != n || s.cols() != n) throw InvalidArgument("Lie seeds must be square matrices of equal size");
  }
  RealSpan span(2 * n * n);
  for (const auto& s : seeds) {
    if (span.add(realified_vector(s))) out.basis.push_back(s);
  }
  int unchanged = 0;
  std::size_t processed = 0;  // brackets [b_i, b_j] with j < processed are done
  while (out.rounds < max_rounds) {
    ++out.rounds;
    const std::size_t before = out.basis.size();
    const std::size_t limit = out.basis.size();
    for (std::size_t i = 0; i < limit; ++i) {
      for (std::size_t j = (i < processed ? processed : i + 1); j < limit; ++j) {
        Eigen::MatrixXcd c = out.basis[i] * out.basis[j] - out.basis[j] * out.basis[i];
        if (span.add(realified_vector(c))) out.basis.push_back(c);
      }
    }
    processed = limit;
    unchanged = out.basis.size() == before ? unchanged + 1 : 0;
    if (unchanged >= 2) {
      out.stabilized = true;
      break;
    }
  }
  out.closure_dim = out.basis.size();
  return out;
}

/// Bases of g_{-3} and g_3 in the basis (w_{-3}, f_{-1}, f_1, w_3), where the
/// Gram matrix of Q_{1/4} is antidiagonal on the w's and the identity on the f's.
inline std::vector<Eigen::MatrixXcd> g_pm3_seeds() {
  using C = std::complex<double>;
  const C I(0, 1);
  std::vector<Eigen::MatrixXcd> out;
  auto A = [&](C vm, C vp, double s) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 1) = vm;
    m(0, 2) = vp;
    m(0, 3) = I * s;
    m(1, 3) = -std::conj(vm);
    m(2, 3) = -std::conj(vp);
    return m;
  };
  auto B = [&](C um, C up, double r) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(1, 0) = -std::conj(um);
    m(2, 0) = -std::conj(up);
    m(3, 0) = I * r;
    m(3, 1) = um;
    m(3, 2) = up;
    return m;
  };
  using Maker = std::function<Eigen::MatrixXcd(C, C, double)>;
  for (const Maker& f : {Maker(A), Maker(B)}) {
    out.push_back(f(1, 0, 0));
    out.push_back(f(I, 0, 0));
    out.push_back(f(0, 1, 0));
    out.push_back(f(0, I, 0));
    out.push_back(f(0, 0, 1));
  }
  return out;
}

inline Eigen::Matrix4cd g_pm3_gram() {
  Eigen::Matrix4cd J = Eigen::Matrix4cd::Zero();
  J(0, 3) = J(3, 0) = 1;
  J(1, 1) = J(2, 2) = 1;
  return J;
}

/// Change of basis to (w_{-3}, f_{-1}, f_1, w_3) for Q_{1/4} at d = 4, built
/// from the exact form: w_{+-3} span the Q-orthogonals of H_{+-3}, scaled so that
/// Q(w_{-3}, w_3) = 1, and f_{-1}, f_1 is a Q-orthonormal basis of their orthogonal.
/// Columns of the result are the new basis vectors in standard coordinates.
inline Eigen::Matrix4cd g_pm3_frame() {
  const AlphaParam a(1, 4);
  const Eigen::MatrixXcd G = build_form(4, a).to_complex();
  auto orth = [&](int p) {
    Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
    e(static_cast<Eigen::Index>(Alphabet(4).index(p))) = 1;
    return Eigen::Vector4cd(G.fullPivLu().solve(e));
  };
  Eigen::Vector4cd wm = orth(-3), wp = orth(3);
  const std::complex<double> q = wm.adjoint() * G * wp;
  wp /= q;  // Q(wm, wp) is linear in wp
  Eigen::MatrixXcd W(4, 2);
  W << wm, wp;
  // F = Q-orthogonal of W = kernel of W^H G
  Eigen::MatrixXcd constraint = W.adjoint() * G;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(constraint);
  Eigen::MatrixXcd F = lu.kernel();
  // Gram-Schmidt in Q on F (Q is positive there)
  Eigen::Vector4cd f1 = F.col(0);
  f1 /= std::sqrt(std::real(std::complex<double>(f1.adjoint() * G * f1)));
  Eigen::Vector4cd f2 = F.col(1);
  f2 -= std::complex<double>(f1.adjoint() * G * f2) * f1;
  f2 /= std::sqrt(std::real(std::complex<double>(f2.adjoint() * G * f2)));
  Eigen::Matrix4cd P;
  P << wm, f1, f2, wp;
  return P;
}

struct IrreducibilityResult {
  bool irreducible = false;
  std::size_t algebra_dim = 0;
  std::size_t full_dim = 0;  // 2 d^2
  std::vector<std::vector<CyclotomicNumber>> fixed_lines;  // witnesses when reducible
};

/// Real algebra generated by the realified L_p. It equals M_d(C), of real
/// dimension 2d^2, exactly when C^{A_d} is irreducible of complex type.
inline IrreducibilityResult real_irreducibility(int d, const AlphaParam& alpha) {
  IrreducibilityResult out;
  const auto gens = build_generators(d, alpha);
  const Eigen::Index n = d;
  out.full_dim = static_cast<std::size_t>(2 * d * d);
  RealSpan span(2 * n * n);
  std::vector<Eigen::MatrixXcd> words{Eigen::MatrixXcd::Identity(n, n)};
  span.add(realified_vector(words.front()));
  std::size_t frontier = 0;
  while (frontier < words.size()) {
    const auto w = words[frontier++];
    for (const auto& L : gens.top_float) {
      Eigen::MatrixXcd y = L * w;
      if (span.add(realified_vector(y))) words.push_back(y);
    }
  }
  out.algebra_dim = span.size();
  out.irreducible = out.algebra_dim == out.full_dim;
  if (!out.irreducible) {
    // common fixed vectors: kernel of the stacked (L_p - Id)
    const int N = alpha.conductor();
    ExactMatrix stacked(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d), CyclotomicNumber::zero(N));
    const auto id = embed_matrix(ExactMatrix::identity(static_cast<std::size_t>(d)), N);
    for (std::size_t k = 0; k < gens.top.size(); ++k) {
      auto D = gens.top[k] - id;
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) stacked(k * static_cast<std::size_t>(d) + i, j) = D(i, j);
    }
    out.fixed_lines = stacked.nullspace();
  }
  return out;
}

struct Gamma3Check {
  bool block_form = false;          // every L_p fixes e and has [[1, v], [0, gamma]] shape
  bool gammas_in_gamma = false;     // every gamma lies in the order-96 group
  bool restricted_match = false;    // gamma(L_0) = L'_{-1}, gamma(L_2) = L'_1
  std::size_t block_group_order = 0;
};

/// At d = 3, alpha = 1/4: in the basis (e, e_0, e_2) with e spanning ker Q,
/// every generator is block upper triangular and the 2x2 blocks lie in the
/// d = 2 group of order 96.
inline Gamma3Check gamma3_block_check() {
  const AlphaParam a(1, 4);
  const int N = a.conductor();
  Gamma3Check out;
  auto ker = build_form(3, a).kernel();
  if (ker.size() != 1) throw DegenerateConfiguration("expected a one-dimensional kernel at d=3, alpha=1/4");
  ExactMatrix P(3, 3, CyclotomicNumber::zero(N));
  for (std::size_t i = 0; i < 3; ++i) P(i, 0) = ker[0][i];
  P(1, 1) = CyclotomicNumber::constant(1, N);  // e_0
  P(2, 2) = CyclotomicNumber::constant(1, N);  // e_2
  const auto Pinv = P.inverse();
  auto gamma_group = enumerate_d2_group(a);
  std::unordered_set<ExactMatrix> gamma(gamma_group.elements.begin(), gamma_group.elements.end());
  out.block_form = true;
  out.gammas_in_gamma = true;
  std::vector<ExactMatrix> blocks;
  for (int p : Alphabet(3).letters()) {
    auto M = Pinv * build_generator(3, a, p, GeneratorKind::top) * P;
    if (!(M(0, 0) == CyclotomicNumber(1)) || !M(1, 0).is_zero() || !M(2, 0).is_zero()) out.block_form = false;
    ExactMatrix g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g(i, j) = M(i + 1, j + 1);
    g = embed_matrix(g, N);
    if (!gamma.count(g)) out.gammas_in_gamma = false;
    blocks.push_back(g);
  }
  out.restricted_match = blocks[1] == build_generator(2, a, -1, GeneratorKind::top) &&
                         blocks[2] == build_generator(2, a, 1, GeneratorKind::top);
  auto bg = enumerate_group(blocks, 1000);
  out.block_group_order = bg.order.value_or(0);
  return out;
}

enum class DensityCase {
  definite_dense_SU,
  indefinite_zariski_dense_SU,
  degenerate_dense_SUstar,
  exceptional_finite,
  exceptional_parabolic_stabilizer,
  exceptional_SU_dense_from_d4,
  unclassified,
};

inline std::string to_string(DensityCase c) {
  switch (c) {
    case DensityCase::definite_dense_SU: return "definite-dense-SU";
    case DensityCase::indefinite_zariski_dense_SU: return "indefinite-Zariski-dense-SU";
    case DensityCase::degenerate_dense_SUstar: return "degenerate-dense-SUstar";
    case DensityCase::exceptional_finite: return "exceptional-finite";
    case DensityCase::exceptional_parabolic_stabilizer: return "exceptional-parabolic-stabilizer";
    case DensityCase::exceptional_SU_dense_from_d4: return "exceptional-SU-dense-from-d4";
    case DensityCase::unclassified: return "unclassified";
  }
  return "?";
}

struct DensityVerdict {
  int d = 2;
  std::string alpha;
  DensityCase verdict = DensityCase::unclassified;
  Signature signature;
  std::vector<std::string> notes;
  /// d = 2 only: exact order of <L_{-1}, L_1> when finite below the bound.
  std::optional<std::size_t> d2_group_order;
  /// Set when the computed d = 2 certificate contradicts the table verdict.
  bool certificate_conflict = false;
};

/// Classification of the closure of the group generated by the L_p, following
/// the signature case table and the exceptional-alpha analysis. This is a
/// verdict, not a certificate; at d = 2 the group is also enumerated.
inline DensityVerdict density_verdict(int d, const AlphaParam& alpha, std::size_t d2_bound = 20000) {
  if (d < 2) throw InvalidArgument("d must be at least 2");
  DensityVerdict v;
  v.d = d;
  v.alpha = alpha.to_string();
  v.signature = predicted_signature(d, alpha);
  const Rational& a = alpha.value();
  const bool quarter_or_sixth = a == Rational(1, 4) || a == Rational(1, 6);
  const bool third = a == Rational(1, 3);
  const Rational la = Rational(d + 1) * a;
  const bool la_int = la.is_integer();
  const bool definite = la < Rational(1);

  if (d == 2 && quarter_or_sixth) {
    v.verdict = DensityCase::exceptional_finite;
  } else if (d == 2 && third) {
    v.verdict = DensityCase::exceptional_parabolic_stabilizer;
    v.notes.push_back("Zariski closure of the SL part is the stabilizer of the kernel vector");
  } else if (d == 3 && quarter_or_sixth) {
    v.verdict = DensityCase::unclassified;
    v.notes.push_back(la_int ? "Gamma_3: extension of the finite d=2 group by (H_{-2})^*; smaller than SU*(Q)"
                             : "exceptional alpha below d=4; no density claim");
  } else if (quarter_or_sixth) {
    if (la_int) {
      v.verdict = DensityCase::degenerate_dense_SUstar;
      v.notes.push_back("exceptional alpha with degenerate form: induction from d=4 lands in SU*(Q)");
    } else {
      v.verdict = DensityCase::exceptional_SU_dense_from_d4;
      v.notes.push_back("Zariski dense in SU(Q) by induction from the d=4 Lie certificate");
    }
  } else if (third) {
    if (la_int) {
      v.verdict = DensityCase::degenerate_dense_SUstar;
    } else {
      v.verdict = definite ? DensityCase::definite_dense_SU : DensityCase::indefinite_zariski_dense_SU;
    }
    v.notes.push_back("alpha=1/3 needs no supplemental work beyond the parabolic d=2 start");
  } else if (definite) {
    v.verdict = DensityCase::definite_dense_SU;
  } else if (!la_int) {
    v.verdict = DensityCase::indefinite_zariski_dense_SU;
  } else {
    v.verdict = DensityCase::degenerate_dense_SUstar;
    v.notes.push_back("density in the usual topology is left open; Zariski density only");
  }

  if (d == 2 && !third) {
    auto g = enumerate_d2_group(alpha, d2_bound);
    v.d2_group_order = g.order;
    if (g.order && v.verdict != DensityCase::exceptional_finite) {
      v.certificate_conflict = true;
      v.notes.push_back("computed: <L_-1, L_1> is finite of order " + std::to_string(*g.order) +
                        ", so it cannot be dense in SU(Q)");
    }
    if (!g.order && v.verdict == DensityCase::exceptional_finite) {
      v.certificate_conflict = true;
      v.notes.push_back("computed: enumeration exceeded the bound for a group expected to be finite");
    }
  }
  return v;
}

}  // namespace kzlab

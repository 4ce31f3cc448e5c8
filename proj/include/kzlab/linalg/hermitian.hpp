#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/linalg/matrix.hpp"

namespace kzlab {

struct Signature {
  int n_minus = 0;
  int n_plus = 0;
  int n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Gram matrix of a Hermitian form on C^d, entries exact, with optional
/// spectral data. entries(i, j) = Q(e_i, e_j), antilinear in the first slot.
struct HermitianGram {
  ExactMatrix entries;
  std::optional<Eigen::VectorXd> eigenvalues;  // ascending
  std::optional<Signature> signature;

  std::size_t dim() const noexcept { return entries.rows(); }
  bool is_hermitian() const { return entries.is_hermitian(); }
  Eigen::MatrixXcd to_complex() const { return entries.to_eigen(); }

  /// Value Q(v, w) = v^H G w.
  CyclotomicNumber evaluate(const std::vector<CyclotomicNumber>& v, const std::vector<CyclotomicNumber>& w) const {
    auto gw = entries.apply(w);
    CyclotomicNumber s(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero() && !gw[i].is_zero()) s += v[i].conj() * gw[i];
    }
    return s;
  }

  /// True when M^H G M = G exactly.
  bool invariant_under(const ExactMatrix& m) const { return m.conj_transpose() * entries * m == entries; }

  /// Fills eigenvalues (floating) and the signature. The kernel dimension is
  /// the exact corank; the remaining eigenvalues are split by sign.
  const Signature& compute_signature() {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_complex());
    eigenvalues = es.eigenvalues();
    const int n = static_cast<int>(dim());
    const int n_zero = n - static_cast<int>(entries.rank());
    std::vector<double> ev(eigenvalues->data(), eigenvalues->data() + n);
    std::sort(ev.begin(), ev.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    Signature sig;
    sig.n_zero = n_zero;
    for (int i = n_zero; i < n; ++i) (ev[static_cast<std::size_t>(i)] < 0 ? sig.n_minus : sig.n_plus) += 1;
    signature = sig;
    return *signature;
  }

  std::vector<std::vector<CyclotomicNumber>> kernel() const { return entries.nullspace(); }
};

}  // namespace kzlab

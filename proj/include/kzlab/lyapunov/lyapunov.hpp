#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <random>
#include <string>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/kz/generators.hpp"

namespace kzlab {

/// Coordinates in which the frame is re-orthonormalized. Exponents do not
/// depend on the choice; finite-time estimates do.
enum class FrameBasis { form_adapted, euclidean };

struct SimConfig {
  int d = 2;
  AlphaParam alpha;
  std::int64_t steps = 100000;
  int trials = 10;
  std::uint64_t seed = 1;
  // weights[i] for top[i], weights[d + i] for bottom[i]; empty means uniform
  std::vector<double> measure;
  int qr_cadence = 8;
  // falls back to euclidean when Q is degenerate
  FrameBasis basis = FrameBasis::form_adapted;

  SimConfig(int d_, AlphaParam a) : d(d_), alpha(a) {}
};

struct SpectrumReport {
  int d = 0;
  std::string alpha;
  std::int64_t steps = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  FrameBasis basis = FrameBasis::form_adapted;
  std::vector<double> exponents;  // descending
  std::vector<double> stderrs;
  std::vector<std::vector<double>> per_trial;  // [trial][index], columns in the same order as exponents
  std::vector<int> zero_set;
  bool simple = true;
  double symmetric_defect = 0.0;
  double max_pair_gap = 0.0;  // largest gap inside a realified pair, averaged over trials

  double max_stderr() const { return stderrs.empty() ? 0.0 : *std::max_element(stderrs.begin(), stderrs.end()); }
};

/// Absolute resolution of the estimator: per-step rounding in the QR
/// accumulates into a drift of a few ulps per step, invisible to the SE.
inline constexpr double kExponentResolution = 1e-12;

namespace detail {

// Every generator is I - e_p u^T, so after any change of basis it stays
// a rank-one update I - a b^T.
struct RankOneUpdate {
  Eigen::VectorXd ar, ai, br, bi;
};

inline RankOneUpdate rank_one_of(const Eigen::MatrixXcd& L, int row, const Eigen::MatrixXcd& S,
                                 const Eigen::MatrixXcd& S_inv) {
  const auto n = L.rows();
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Identity(n, n) - L;
  Eigen::MatrixXcd rest = D;
  rest.row(row).setZero();
  if (rest.norm() > 1e-12) throw InvalidArgument("generator is not a single-row update of the identity");
  Eigen::VectorXcd a = S.col(row);
  Eigen::VectorXcd b = (D.row(row) * S_inv).transpose();
  return {a.real(), a.imag(), b.real(), b.imag()};
}

// realified update x -= a (b^T x) on a 2d x m frame with rows (Re x, Im x)
inline void apply_realified(const RankOneUpdate& g, Eigen::MatrixXd& F, int d) {
  Eigen::RowVectorXd re = g.br.transpose() * F.topRows(d) - g.bi.transpose() * F.bottomRows(d);
  Eigen::RowVectorXd im = g.bi.transpose() * F.topRows(d) + g.br.transpose() * F.bottomRows(d);
  F.topRows(d).noalias() -= g.ar * re - g.ai * im;
  F.bottomRows(d).noalias() -= g.ai * re + g.ar * im;
}

// S with Q = S^H J S, J = diag(+-1); empty when Q is degenerate
inline std::optional<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>> form_adapted_basis(int d, const AlphaParam& alpha) {
  Eigen::MatrixXcd G = build_form(d, alpha).entries.to_eigen();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.cwiseAbs().minCoeff() < 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff())) return std::nullopt;
  Eigen::MatrixXcd S = ev.cwiseAbs().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  Eigen::MatrixXcd S_inv = es.eigenvectors() * ev.cwiseAbs().cwiseSqrt().cwiseInverse().asDiagonal();
  return std::make_pair(S, S_inv);
}

inline double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace detail

/// Real Lyapunov exponents (2d of them) of one random product.
inline std::vector<double> simulate_trial(const std::vector<detail::RankOneUpdate>& gens,
                                          std::discrete_distribution<int>& pick, std::mt19937_64& rng, int d,
                                          std::int64_t steps, int cadence) {
  const int n = 2 * d;
  Eigen::MatrixXd F = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd logs = Eigen::VectorXd::Zero(n);
  auto reorthonormalize = [&] {
    if (!F.allFinite() || F.cwiseAbs().maxCoeff() > 1e150) {
      throw NumericalOverflow("frame overflowed between re-orthonormalizations; lower qr_cadence");
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(F);
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    Eigen::MatrixXd Q = qr.householderQ();
    for (int i = 0; i < n; ++i) {
      const double r = R(i, i);
      if (r == 0.0 || !std::isfinite(r)) throw NumericalOverflow("degenerate frame during re-orthonormalization");
      logs(i) += std::log(std::abs(r));
    }
    F = Q;
  };
  for (std::int64_t s = 1; s <= steps; ++s) {
    detail::apply_realified(gens[static_cast<std::size_t>(pick(rng))], F, d);
    if (s % cadence == 0 || s == steps) reorthonormalize();
  }
  // kept in QR position order; sorting each trial would bias the top entries upward
  std::vector<double> out(logs.data(), logs.data() + n);
  for (double& x : out) x /= static_cast<double>(steps);
  return out;
}

inline SpectrumReport simulate_spectrum(const SimConfig& cfg) {
  if (cfg.d < 2) throw InvalidArgument("d must be at least 2");
  if (cfg.steps < 1 || cfg.trials < 1 || cfg.qr_cadence < 1) {
    throw InvalidArgument("steps, trials and qr_cadence must be positive");
  }
  const int d = cfg.d;
  auto G = build_generators(d, cfg.alpha);
  FrameBasis basis = cfg.basis;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Identity(d, d), S_inv = S;
  if (basis == FrameBasis::form_adapted) {
    if (auto adapted = detail::form_adapted_basis(d, cfg.alpha)) {
      std::tie(S, S_inv) = *adapted;
    } else {
      basis = FrameBasis::euclidean;
    }
  }
  std::vector<detail::RankOneUpdate> gens;
  for (const auto* set : {&G.top_float, &G.bottom_float}) {
    for (int i = 0; i < d; ++i) gens.push_back(detail::rank_one_of((*set)[static_cast<std::size_t>(i)], i, S, S_inv));
  }

  std::vector<double> weights = cfg.measure.empty() ? std::vector<double>(gens.size(), 1.0) : cfg.measure;
  if (weights.size() != gens.size()) throw InvalidArgument("measure needs one weight per generator (2d)");
  // top and bottom generators at the same letter are mutually inverse
  for (int i = 0; i < d; ++i) {
    if (weights[static_cast<std::size_t>(i)] != weights[static_cast<std::size_t>(d + i)]) {
      throw InvalidArgument("measure must be symmetric under inversion");
    }
  }

  SpectrumReport rep;
  rep.d = d;
  rep.alpha = cfg.alpha.to_string();
  rep.steps = cfg.steps;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.basis = basis;

  std::vector<double> pair_gaps;
  for (int t = 0; t < cfg.trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    auto real = simulate_trial(gens, pick, rng, d, cfg.steps, cfg.qr_cadence);
    std::vector<double> cplx(static_cast<std::size_t>(d));
    double gap = 0;
    for (int i = 0; i < d; ++i) {
      cplx[static_cast<std::size_t>(i)] = 0.5 * (real[2 * i] + real[2 * i + 1]);
      gap = std::max(gap, real[2 * i] - real[2 * i + 1]);
    }
    pair_gaps.push_back(gap);
    rep.per_trial.push_back(cplx);
  }
  rep.max_pair_gap = detail::mean(pair_gaps);

  for (int i = 0; i < d; ++i) {
    std::vector<double> col;
    for (const auto& tr : rep.per_trial) col.push_back(tr[static_cast<std::size_t>(i)]);
    const double m = detail::mean(col);
    double var = 0;
    for (double x : col) var += (x - m) * (x - m);
    var = cfg.trials > 1 ? var / (cfg.trials - 1) : 0.0;
    rep.exponents.push_back(m);
    rep.stderrs.push_back(std::sqrt(var / cfg.trials));
  }
  // QR positions are ordered only asymptotically; report the means descending
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rep.exponents[a] > rep.exponents[b]; });
  {
    auto e = rep.exponents, se = rep.stderrs;
    for (int i = 0; i < d; ++i) {
      rep.exponents[i] = e[order[i]];
      rep.stderrs[i] = se[order[i]];
    }
    for (auto& tr : rep.per_trial) {
      auto copy = tr;
      for (int i = 0; i < d; ++i) tr[i] = copy[order[i]];
    }
  }

  for (int i = 0; i < d; ++i) {
    rep.symmetric_defect = std::max(rep.symmetric_defect, std::abs(rep.exponents[i] + rep.exponents[d - 1 - i]));
  }

  // zero threshold: max(3 SE, 0.1 * smallest |lambda| among the top p exponents, resolution)
  const auto sig = predicted_signature(d, cfg.alpha);
  const int p = std::min(sig.n_minus, sig.n_plus);
  double top_floor = 0;
  if (p > 0) {
    top_floor = std::abs(rep.exponents[0]);
    for (int i = 0; i < p; ++i) top_floor = std::min(top_floor, std::abs(rep.exponents[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < d; ++i) {
    const double thr = std::max({3 * rep.stderrs[i], 0.1 * top_floor, kExponentResolution});
    if (std::abs(rep.exponents[i]) < thr) rep.zero_set.push_back(i);
  }
  std::vector<int> nonzero;
  for (int i = 0; i < d; ++i) {
    if (std::find(rep.zero_set.begin(), rep.zero_set.end(), i) == rep.zero_set.end()) nonzero.push_back(i);
  }
  for (std::size_t a = 0; a + 1 < nonzero.size(); ++a) {
    const int i = nonzero[a], j = nonzero[a + 1];
    if (rep.exponents[i] - rep.exponents[j] <= 3 * (rep.stderrs[i] + rep.stderrs[j])) rep.simple = false;
  }
  return rep;
}

enum class SpectrumVerdict { consistent, inconsistent, inconclusive };

inline std::string to_string(SpectrumVerdict v) {
  switch (v) {
    case SpectrumVerdict::consistent: return "consistent";
    case SpectrumVerdict::inconsistent: return "inconsistent";
    case SpectrumVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Number of exponents the invariant form forces to vanish: q - p, plus the kernel when degenerate.
inline int expected_zero_count(int d, const AlphaParam& alpha) {
  const auto s = predicted_signature(d, alpha);
  return std::abs(s.n_plus - s.n_minus) + s.n_zero;
}

inline SpectrumVerdict classify_spectrum(const SpectrumReport& rep, int d, const AlphaParam& alpha) {
  if (rep.d != d || static_cast<int>(rep.exponents.size()) != d) {
    throw InvalidArgument("report dimension does not match d");
  }
  const double se = rep.max_stderr();
  const int expected = expected_zero_count(d, alpha);
  const int zeros = static_cast<int>(rep.zero_set.size());

  // an exponent is ambiguous when its error bar straddles the zero threshold
  const auto sig = predicted_signature(d, alpha);
  const int p = std::min(sig.n_minus, sig.n_plus);
  double top_floor = 0;
  for (int i = 0; i < p; ++i) top_floor = i == 0 ? std::abs(rep.exponents[0]) : std::min(top_floor, std::abs(rep.exponents[i]));
  bool ambiguous = false;
  for (int i = 0; i < d; ++i) {
    const double thr = std::max({3 * rep.stderrs[i], 0.1 * top_floor, kExponentResolution});
    if (std::abs(std::abs(rep.exponents[i]) - thr) < 3 * rep.stderrs[i]) ambiguous = true;
  }
  // undersampled: nonzero exponents not resolved from zero by the error bars
  if (p > 0 && top_floor < 6 * se) ambiguous = true;

  const bool symmetric = rep.symmetric_defect < 5 * se || rep.symmetric_defect < kExponentResolution;
  if (symmetric && zeros == expected && rep.simple) return SpectrumVerdict::consistent;
  return ambiguous ? SpectrumVerdict::inconclusive : SpectrumVerdict::inconsistent;
}

}  // namespace kzlab

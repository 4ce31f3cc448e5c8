// Acceptance run: one PASS/FAIL line per criterion AC1..AC10.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kzlab/kzlab.hpp"

using namespace kzlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 for none
  std::function<Outcome()> run;
};

std::vector<AlphaParam> alphas_r_over_2k(int k_max) {
  std::vector<AlphaParam> out;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (int k = 2; k <= k_max; ++k)
    for (int r = 1; r < k; ++r) {
      auto a = AlphaParam::from_rk(r, k);
      if (seen.insert({a.numerator(), a.denominator()}).second) out.push_back(a);
    }
  return out;
}

Outcome ac1() {
  auto g = enumerate_d2_group(AlphaParam(1, 4));
  if (!g.order) return {false, "enumeration exceeded its bound"};
  return {*g.order == 96, "order " + std::to_string(*g.order)};
}

Outcome ac2() {
  int checked = 0;
  for (int d = 2; d <= 10; ++d)
    for (const auto& a : alphas_r_over_2k(6)) {
      auto G = build_generators(d, a);
      auto Q = build_form(d, a);
      for (std::size_t i = 0; i < G.top.size(); ++i) {
        if (!Q.invariant_under(G.top[i]) || !Q.invariant_under(G.bottom[i])) {
          return {false, "not invariant at d=" + std::to_string(d) + " alpha=" + a.to_string()};
        }
        checked += 2;
      }
    }
  return {true, std::to_string(checked) + " generators, exact"};
}

Outcome ac3() {
  int points = 0;
  double worst = 0;
  for (int d = 2; d <= 12; ++d)
    for (const auto& a : alphas_r_over_2k(8)) {
      const std::int64_t ell = d + 1;
      if ((ell * a.numerator()) % a.denominator() == 0) continue;
      auto D = diagonalize_form(d, a);
      // ceiling formula evaluated independently in floating point
      const double la = static_cast<double>(ell) * a.to_double();
      const int n_minus = static_cast<int>(std::ceil(la - 1 - 1e-12));
      const int n_plus = static_cast<int>(std::ceil(ell - la - 1 - 1e-12));
      if (D.signature.n_minus != n_minus || D.signature.n_plus != n_plus || D.signature.n_zero != 0) {
        return {false, "signature mismatch at d=" + std::to_string(d) + " alpha=" + a.to_string()};
      }
      for (std::size_t i = 0; i < D.s_values.size(); ++i) {
        const double s = D.s_values[i];
        const double pred = 0.5 * ell * (1 - std::tan(M_PI * a.to_double()) / std::tan(M_PI * s / ell));
        worst = std::max(worst, std::abs(D.eigenvalues_float[i] - pred));
      }
      ++points;
    }
  std::ostringstream os;
  os << points << " (d, alpha) points, max eigenvalue deviation " << std::setprecision(3) << worst;
  return {worst < 1e-10, os.str()};
}

Outcome ac4() {
  std::vector<AlphaParam> alphas;
  for (int b = 3; alphas.size() < 50; ++b)
    for (int a = 1; 2 * a < b && alphas.size() < 50; ++a)
      if (std::gcd(a, b) == 1) alphas.emplace_back(a, b);
  int hyperbolic = 0;
  for (const auto& a : alphas) {
    auto S = special_element_d2(a);
    const double tc = 2 * std::cos(2 * M_PI * a.to_double());
    if (!S.trace_matches || S.det != CyclotomicNumber(1)) return {false, "trace/det at alpha=" + a.to_string()};
    if (std::abs(S.trace.approx_complex() - std::complex<double>(1 - tc, 0)) > 1e-12) {
      return {false, "trace value at alpha=" + a.to_string()};
    }
    const bool third = a.numerator() == 1 && a.denominator() == 3;
    if (third && S.classification != SpecialClass::parabolic) return {false, "1/3 not parabolic"};
    if (!third && (S.classification == SpecialClass::hyperbolic) != (tc < -1)) {
      return {false, "hyperbolicity at alpha=" + a.to_string()};
    }
    hyperbolic += S.classification == SpecialClass::hyperbolic;
  }
  return {true, "50 alpha, " + std::to_string(hyperbolic) + " hyperbolic, 1/3 parabolic"};
}

Outcome ac5() {
  std::vector<AlphaParam> alphas;
  for (int b = 5; alphas.size() < 20; ++b)
    for (int a = 1; 2 * a < b && alphas.size() < 20; ++a) {
      if (std::gcd(a, b) != 1 || 3 * a == b || (a == 1 && (b == 4 || b == 6))) continue;
      alphas.emplace_back(a, b);
    }
  for (const auto& a : alphas) {
    auto vf = vector_fields_d2(a);
    const auto one = CyclotomicNumber(1);
    const auto expected = (one - a.zeta() * a.zeta() * a.zeta()) * (one - a.rho() * a.rho() * a.rho());
    if (vf.determinant != expected || vf.determinant.is_zero()) return {false, "determinant at alpha=" + a.to_string()};
    std::vector<Eigen::MatrixXcd> seeds(vf.fields.begin(), vf.fields.end());
    auto lc = lie_closure_dim(seeds);
    if (lc.closure_dim != 3) return {false, "closure " + std::to_string(lc.closure_dim) + " at alpha=" + a.to_string()};
  }
  auto big = lie_closure_dim(g_pm3_seeds());
  return {big.closure_dim == 15, "20 alpha give dimension 3; g_-3 + g_3 at (4, 1/4) gives " + std::to_string(big.closure_dim)};
}

Outcome ac6() {
  int tables = 0;
  for (int k = 1; k <= 8; ++k)
    for (int ell = 3; ell <= 12; ++ell) {
      auto T = character_table(k, ell);
      auto H = decompose_homology(k, ell);
      const std::string at = " at k=" + std::to_string(k) + " l=" + std::to_string(ell);
      if (!T.orthonormal()) return {false, "orthogonality" + at};
      if (T.sum_of_squared_dims() != 4LL * k * ell) return {false, "sum of squares" + at};
      if (!H.ab_identity_holds) return {false, "chi_ab identity" + at};
      if (H.chi_ab_identity != 2LL * H.genus) return {false, "chi_ab(id) != 2g" + at};
      ++tables;
    }
  return {true, std::to_string(tables) + " character tables"};
}

Outcome ac7() {
  int cases = 0;
  for (int k = 2; k <= 6; ++k)
    for (int r = 1; r < k; ++r)
      for (int ell = 3; ell <= 9; ++ell) {
        auto h = hodge_gram(SurfaceParams(k, ell), r);
        auto Q = build_form(ell - 1, AlphaParam::from_rk(r, k));
        const std::string at = " at k=" + std::to_string(k) + " r=" + std::to_string(r) + " l=" + std::to_string(ell);
        if (!(h.rescaled.entries == Q.entries)) return {false, "entrywise mismatch" + at};
        const double th = M_PI * r / k;
        const double diag = -k * (1 + std::cos(th)) / std::sin(th);
        if (std::abs(h.raw_diagonal.approx_complex() - std::complex<double>(diag, 0)) > 1e-10) {
          return {false, "raw diagonal" + at};
        }
        for (std::size_t a = 0; a < h.raw.rows(); ++a)
          for (std::size_t b = 0; b < a; ++b)
            if (std::abs(h.raw(a, b).approx_complex().imag() - k / 2.0) > 1e-10) return {false, "Im != k/2" + at};
        ++cases;
      }
  return {true, std::to_string(cases) + " (k, r, l) cases"};
}

Outcome ac8() {
  std::size_t loops_seen = 0;
  for (int d = 2; d <= 12; ++d) {
    auto D = build_diagram(d);
    if (D.size() != (std::size_t{1} << (d - 1)) - 1) return {false, "vertex count at d=" + std::to_string(d)};
    for (std::size_t v = 0; v < D.size(); ++v) {
      auto [top, bottom] = D.winners(static_cast<int>(v));
      if (!(top > bottom)) return {false, "winner inequality at d=" + std::to_string(d)};
      if (d <= 8) {
        for (char t : {'t', 'b'})
          if (!(rauzy_move(D.vertices[v], t) == D.vertices[static_cast<std::size_t>(D.arrow(static_cast<int>(v), t))])) {
            return {false, "arrow differs from Rauzy move at d=" + std::to_string(d)};
          }
      }
    }
    for (const auto& l : elementary_loops(D)) {
      if (l.length + static_cast<int>(D.words[static_cast<std::size_t>(l.base_vertex)].size()) != d - 1) {
        return {false, "loop length at d=" + std::to_string(d)};
      }
      ++loops_seen;
    }
  }
  return {true, "d <= 12, " + std::to_string(loops_seen) + " elementary loops"};
}

std::string spectrum_line(const SpectrumReport& r) {
  std::ostringstream os;
  os << std::setprecision(3) << "[";
  for (std::size_t i = 0; i < r.exponents.size(); ++i) os << (i ? ", " : "") << r.exponents[i];
  os << "], zeros " << r.zero_set.size();
  return os.str();
}

Outcome ac9() {
  auto run = [](int d, AlphaParam a, std::int64_t steps, int trials) {
    SimConfig c(d, a);
    c.steps = steps;
    c.trials = trials;
    c.seed = 20240601;
    return simulate_spectrum(c);
  };
  auto main_run = run(6, AlphaParam(3, 10), 1000000, 20);
  const double se = main_run.max_stderr();
  if (main_run.symmetric_defect >= 5 * se) return {false, "symmetry defect " + std::to_string(main_run.symmetric_defect)};
  if (main_run.zero_set.size() != 2) return {false, "d=6: " + spectrum_line(main_run)};
  if (!main_run.simple) return {false, "d=6 nonzero exponents not simple"};
  if (classify_spectrum(main_run, 6, AlphaParam(3, 10)) != SpectrumVerdict::consistent) return {false, "d=6 not consistent"};
  auto definite = run(4, AlphaParam(1, 10), 100000, 10);
  if (definite.zero_set.size() != 4) return {false, "d=4: " + spectrum_line(definite)};
  auto pair = run(2, AlphaParam(2, 5), 100000, 10);
  if (!pair.zero_set.empty() || !(pair.exponents[0] > 0)) return {false, "d=2: " + spectrum_line(pair)};
  return {true, "d=6 " + spectrum_line(main_run) + "; d=4 all zero; d=2 +-" + spectrum_line(pair).substr(1, 5)};
}

Outcome ac10() {
  VerificationGrid g;
  for (int k = 1; k <= 8; ++k)
    for (int ell = 3; ell <= 12; ++ell) g.surfaces.emplace_back(k, ell);
  auto rep = run_verification_suite(g, {false});
  int gb = 0, flagged = 0;
  for (const auto& c : rep.checks) {
    if (c.check_id == "surface.gauss_bonnet") {
      if (c.status != CheckStatus::pass) return {false, "Gauss-Bonnet fails at k=" + c.params.at("k") + " l=" + c.params.at("l")};
      ++gb;
    }
    if (c.check_id == "surface.stratum_label" && c.params.at("k") != "1") {
      if (c.status != CheckStatus::flagged) return {false, "stratum label not flagged at k=" + c.params.at("k")};
      ++flagged;
    }
  }
  return {gb == 80 && flagged == 70,
          std::to_string(gb) + " Gauss-Bonnet checks pass, " + std::to_string(flagged) + " stratum labels flagged"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "order-96 certificate", 5, ac1},
      {"AC2", "exact form invariance", 30, ac2},
      {"AC3", "signature formula", 0, ac3},
      {"AC4", "d=2 identities", 0, ac4},
      {"AC5", "Lie certificates", 10, ac5},
      {"AC6", "character suite", 60, ac6},
      {"AC7", "homology/matrix cross-oracle", 0, ac7},
      {"AC8", "Rauzy diagram", 0, ac8},
      {"AC9", "Lyapunov property check", 600, ac9},
      {"AC10", "Gauss-Bonnet sweep", 0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      out.ok = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.time_limit_s)) + " s limit";
    }
    failures += !out.ok;
    std::cout << (out.ok ? "PASS " : "FAIL ") << std::left << std::setw(5) << c.id << c.title << ": " << out.detail
              << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kzlab/density/density.hpp"
#include "kzlab/group/group.hpp"
#include "kzlab/kz/generators.hpp"
#include "kzlab/lyapunov/lyapunov.hpp"
#include "kzlab/rauzy/rauzy.hpp"
#include "kzlab/surface/surface.hpp"

namespace kzlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class CheckStatus { pass, fail, flagged };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

inline CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "flagged") return CheckStatus::flagged;
  throw InvalidArgument("unknown check status '" + s + "'");
}

struct CheckRecord {
  std::string check_id;
  std::map<std::string, std::string> params;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct SpectrumPoint {
  int d = 2;
  std::string alpha;  // exact fraction
  std::int64_t steps = 100000;
  int trials = 10;
  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

/// Parameter grid of the verification suite. Surface points (k, l) drive the
/// surface, character and Hodge checks; every d in `dims` is paired with
/// every alpha in `alphas` for the generator checks.
struct VerificationGrid {
  std::vector<std::pair<int, int>> surfaces;
  std::vector<int> dims;
  std::vector<std::string> alphas;
  bool density = true;
  std::vector<SpectrumPoint> spectra;
  std::uint64_t seed = 2024;
  friend bool operator==(const VerificationGrid&, const VerificationGrid&) = default;
};

inline constexpr int kMaxGridK = 8;
inline constexpr int kMaxGridEll = 13;
inline constexpr int kMaxGridD = 12;

/// alpha = r/2k, 0 < r < k <= k_max, without repeats.
inline std::vector<std::string> standard_alphas(int k_max) {
  std::set<Rational> seen;
  std::vector<std::string> out;
  for (int k = 2; k <= k_max; ++k)
    for (int r = 1; r < k; ++r) {
      auto a = AlphaParam::from_rk(r, k);
      if (seen.insert(Rational(a.numerator(), a.denominator())).second) out.push_back(a.to_string());
    }
  return out;
}

inline VerificationGrid default_grid() {
  VerificationGrid g;
  for (int k = 1; k <= kMaxGridK; ++k)
    for (int ell = 3; ell <= 12; ++ell) g.surfaces.emplace_back(k, ell);
  for (int d = 2; d <= kMaxGridD; ++d) g.dims.push_back(d);
  g.alphas = standard_alphas(8);
  g.spectra = {{2, "2/5", 100000, 10}, {4, "1/10", 100000, 10}, {6, "3/10", 100000, 20}};
  return g;
}

struct ReportSummary {
  int pass = 0, fail = 0, flagged = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::optional<std::string> timestamp;
  VerificationGrid grid;
  std::vector<CheckRecord> checks;
  ReportSummary summary;

  bool passed() const { return summary.fail == 0; }
  int exit_code() const { return passed() ? 0 : 1; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

namespace detail {

inline void validate_grid(const VerificationGrid& g) {
  const bool spectra_only = g.surfaces.empty() && (g.dims.empty() || g.alphas.empty());
  if (spectra_only && g.spectra.empty()) throw InvalidGrid("grid has no points");
  if (g.dims.empty() != g.alphas.empty() && g.surfaces.empty() && g.spectra.empty()) {
    throw InvalidGrid("generator grid needs both d and alpha values");
  }
  for (auto [k, ell] : g.surfaces) {
    if (k < 1 || k > kMaxGridK || ell < 3 || ell > kMaxGridEll) {
      throw InvalidGrid("surface point (k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ") outside 1<=k<=" +
                        std::to_string(kMaxGridK) + ", 3<=l<=" + std::to_string(kMaxGridEll));
    }
  }
  for (int d : g.dims) {
    if (d < 2 || d > kMaxGridD) throw InvalidGrid("d=" + std::to_string(d) + " outside 2..12");
  }
  auto check_alpha = [](const std::string& s) {
    try {
      (void)AlphaParam::parse(s);
    } catch (const InexactInput&) {
      throw;
    } catch (const Error& e) {
      throw InvalidGrid("bad alpha '" + s + "': " + e.what());
    }
  };
  for (const auto& a : g.alphas) check_alpha(a);
  for (const auto& sp : g.spectra) {
    check_alpha(sp.alpha);
    if (sp.d < 2 || sp.d > kMaxGridD || sp.steps < 1 || sp.trials < 2) {
      throw InvalidGrid("spectrum point needs 2<=d<=12, steps>=1, trials>=2");
    }
  }
}

class Collector {
 public:
  explicit Collector(std::vector<CheckRecord>& out) : out_(out) {}

  void add(std::string id, std::map<std::string, std::string> params, CheckStatus s, std::string detail = {}) {
    out_.push_back({std::move(id), std::move(params), s, std::move(detail)});
  }
  void expect(std::string id, std::map<std::string, std::string> params, bool ok, std::string detail = {}) {
    add(std::move(id), std::move(params), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  }
  // a thrown library error is a failed check, not a crashed suite
  void guarded(const std::string& id, const std::map<std::string, std::string>& params,
               const std::function<void()>& body) {
    const auto before = out_.size();
    try {
      body();
    } catch (const std::exception& e) {
      out_.resize(before);
      add(id, params, CheckStatus::fail, std::string("exception: ") + e.what());
    }
  }

 private:
  std::vector<CheckRecord>& out_;
};

inline std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

inline void surface_checks(Collector& c, int k, int ell) {
  const std::map<std::string, std::string> P{{"k", std::to_string(k)}, {"l", std::to_string(ell)}};
  c.guarded("surface.profile", P, [&] {
    auto prof = singularity_profile(SurfaceParams(k, ell));
    c.expect("surface.gauss_bonnet", P, prof.gauss_bonnet_holds(),
             "sum of cone orders " + prof.order_sum().to_string() + ", 2g-2 = " + std::to_string(2 * prof.genus - 2));
    if (prof.stratum_label_matches()) {
      c.add("surface.stratum_label", P, CheckStatus::pass);
    } else {
      c.add("surface.stratum_label", P, CheckStatus::flagged,
            "printed stratum orders differ from computed cone orders (A-point order " +
                prof.stratum_label_orders.back().to_string() + " vs " + prof.cone_orders.back().to_string() + ")");
    }
  });
  c.guarded("group.characters", P, [&] {
    auto T = character_table(k, ell);
    c.expect("group.character_orthogonality", P, T.orthonormal());
    c.expect("group.sum_of_squared_dims", P, T.sum_of_squared_dims() == 4LL * k * ell,
             std::to_string(T.sum_of_squared_dims()));
    auto H = decompose_homology(k, ell);
    c.expect("group.chi_ab_identity", P, H.ab_identity_holds);
    c.expect("group.chi_ab_genus", P, H.chi_ab_identity == 2LL * H.genus,
             "chi_ab(id)=" + std::to_string(H.chi_ab_identity) + ", 2g=" + std::to_string(2 * H.genus));
  });
  c.guarded("hodge.cross_oracle", P, [&] {
    if (k < 2) {
      c.add("hodge.cross_oracle", P, CheckStatus::pass, "vacuous: no 0<r<k");
      c.add("hodge.closed_form", P, CheckStatus::pass, "vacuous: no 0<r<k");
      c.add("hodge.convention", P, CheckStatus::pass, "vacuous: no 0<r<k");
      return;
    }
    bool equal = true, closed = true;
    std::string where;
    for (int r = 1; r < k; ++r) {
      auto h = hodge_gram(SurfaceParams(k, ell), r);
      auto Q = build_form(ell - 1, AlphaParam::from_rk(r, k));
      if (!(h.rescaled.entries == Q.entries)) {
        equal = false;
        where += " r=" + std::to_string(r);
      }
      const double th = M_PI * r / k;
      const double diag = -k * (1 + std::cos(th)) / std::sin(th);
      if (std::abs(h.raw_diagonal.approx_complex() - std::complex<double>(diag, 0)) > 1e-10) closed = false;
      for (std::size_t a = 0; a < h.raw.rows(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          if (std::abs(h.raw(a, b).approx_complex().imag() - k / 2.0) > 1e-10) closed = false;
    }
    c.expect("hodge.cross_oracle", P, equal, equal ? "rescaled Hodge Gram equals Q entrywise" : "mismatch at" + where);
    c.expect("hodge.closed_form", P, closed, "diagonal -k(1+cos)/sin, off-diagonal Im = k/2");
    c.add("hodge.convention", P, CheckStatus::flagged,
          "Hodge array is linear in the first slot, Q antilinear; equal arrays, forms related by h(v,w) = Q(conj v, conj w)");
  });
}

inline void rauzy_checks(Collector& c, int d) {
  const std::map<std::string, std::string> P{{"d", std::to_string(d)}};
  c.guarded("rauzy.vertex_count", P, [&] {
    auto D = build_diagram(d);
    const std::size_t expected = (std::size_t{1} << (d - 1)) - 1;
    c.expect("rauzy.vertex_count", P, D.size() == expected, std::to_string(D.size()));
    bool arrows = true, winners_ok = true;
    for (std::size_t v = 0; v < D.size(); ++v) {
      for (char type : {'t', 'b'}) {
        if (!(rauzy_move(D.vertices[v], type) == D.vertices[static_cast<std::size_t>(D.arrow(static_cast<int>(v), type))]))
          arrows = false;
      }
      auto [top, bottom] = D.winners(static_cast<int>(v));
      if (!(top > bottom)) winners_ok = false;
    }
    c.expect("rauzy.arrow_oracle", P, arrows, "inductive arrows vs standard Rauzy moves");
    c.expect("rauzy.winner_inequality", P, winners_ok);
    bool lengths = true;
    auto loops = elementary_loops(D);
    for (const auto& l : loops) {
      if (l.length + static_cast<int>(D.words[static_cast<std::size_t>(l.base_vertex)].size()) != d - 1) lengths = false;
    }
    const auto classes = loop_classes(loops).size();
    c.expect("rauzy.loop_lengths", P, lengths && static_cast<int>(classes) == 2 * (d - 1),
             std::to_string(loops.size()) + " loops in " + std::to_string(classes) + " (type, winner) classes");
  });
}

inline void generator_checks(Collector& c, int d, const AlphaParam& a, bool density) {
  const std::map<std::string, std::string> P{{"d", std::to_string(d)}, {"alpha", a.to_string()}};
  c.guarded("number.rho_unit", P, [&] {
    c.expect("number.rho_unit", P, a.rho() * a.rho().conj() == CyclotomicNumber(1) && a.rho() * a.zeta() == CyclotomicNumber(1));
  });
  c.guarded("kz.form_invariance", P, [&] {
    auto G = build_generators(d, a);
    auto Q = build_form(d, a);
    bool inv = true, pairs = true;
    const auto minus_zeta = CyclotomicNumber(-1) * a.zeta();
    for (std::size_t i = 0; i < G.top.size(); ++i) {
      inv = inv && Q.invariant_under(G.top[i]) && Q.invariant_under(G.bottom[i]);
      pairs = pairs && G.top[i] * G.bottom[i] == ExactMatrix::identity(static_cast<std::size_t>(d)) &&
              G.top[i].determinant() == minus_zeta;
    }
    c.expect("kz.form_invariance", P, inv, "exact, all p, both kinds");
    c.expect("kz.inverse_pairs", P, pairs, "L^t_p L^b_p = I, det = -zeta");
    bool eig = true;
    for (int p : G.letters) {
      auto E = eigenstructure_Lp(d, a, p);
      eig = eig && E.charpoly_matches && E.special_pair_holds && E.hyperplane_fixed;
    }
    c.expect("kz.eigenstructure", P, eig, "charpoly, special eigenpair, fixed hyperplane");
  });
  c.guarded("kz.signature", P, [&] {
    auto D = diagonalize_form(d, a);
    auto pred = predicted_signature(d, a);
    c.expect("kz.signature", P, D.signature == pred && D.orthogonal,
             "(" + std::to_string(D.signature.n_minus) + "," + std::to_string(D.signature.n_plus) + "," +
                 std::to_string(D.signature.n_zero) + ")");
    double err = 0;
    for (std::size_t i = 0; i < D.eigenvalues_float.size(); ++i) err = std::max(err, std::abs(D.eigenvalues_float[i] - D.predicted[i]));
    c.expect("kz.eigenvalues", P, err < 1e-10, "max deviation " + fmt(err));
  });
  if (d == 2) {
    c.guarded("kz.d2_special_element", P, [&] {
      auto S = special_element_d2(a);
      c.expect("kz.d2_trace_det", P, S.trace_matches && S.det == CyclotomicNumber(1));
      const double two_cos = 2 * std::cos(2 * M_PI * a.to_double());
      const bool third = a.numerator() == 1 && a.denominator() == 3;
      bool cls = third ? S.classification == SpecialClass::parabolic
                       : (S.classification == SpecialClass::hyperbolic) == (two_cos < -1);
      c.expect("kz.d2_classification", P, cls, to_string(S.classification));
      const bool listed = a.numerator() == 1 && (a.denominator() == 4 || a.denominator() == 6);
      if (S.order && !listed) {
        c.add("kz.d2_finite_order", P, CheckStatus::flagged,
              "special element has finite order " + std::to_string(*S.order) + " outside {1/4, 1/6}");
      } else {
        c.expect("kz.d2_finite_order", P, S.order.has_value() == listed,
                 S.order ? "order " + std::to_string(*S.order) : "infinite order");
      }
    });
    c.guarded("lie.vector_fields", P, [&] {
      auto vf = vector_fields_d2(a);
      const bool det_ok = vf.determinant == vf.predicted;
      if (vf.fields.empty()) {
        c.expect("lie.vector_fields", P, det_ok, "parabolic: no eigenvector fields");
        return;
      }
      std::vector<Eigen::MatrixXcd> seeds(vf.fields.begin(), vf.fields.end());
      auto lc = lie_closure_dim(seeds);
      const bool degenerate = vf.determinant.is_zero();
      c.expect("lie.vector_fields", P, det_ok && (degenerate || lc.closure_dim == 3),
               "closure dimension " + std::to_string(lc.closure_dim) + (degenerate ? " (independence determinant 0)" : ""));
    });
  }
  if (!density) return;
  c.guarded("density.verdict", P, [&] {
    auto v = density_verdict(d, a);
    std::string detail = to_string(v.verdict);
    if (v.d2_group_order) detail += ", group order " + std::to_string(*v.d2_group_order);
    if (v.certificate_conflict) {
      c.add("density.verdict", P, CheckStatus::flagged, detail + ": computed d=2 certificate contradicts the table verdict");
    } else {
      c.add("density.verdict", P, CheckStatus::pass, detail);
    }
  });
  const bool quarter = a.numerator() == 1 && a.denominator() == 4;
  if (d == 2 && quarter) {
    c.guarded("density.order", P, [&] {
      auto g = enumerate_d2_group(a);
      c.expect("density.order", P, g.order && *g.order == 96,
               g.order ? "order=" + std::to_string(*g.order) : std::string("order exceeds bound"));
    });
  }
  if (d == 3 && quarter) {
    c.guarded("density.gamma3_blocks", P, [&] {
      auto g3 = gamma3_block_check();
      c.expect("density.gamma3_blocks", P, g3.block_form && g3.gammas_in_gamma && g3.restricted_match && g3.block_group_order == 96,
               "block group order " + std::to_string(g3.block_group_order));
    });
  }
  if (d == 4 && quarter) {
    c.guarded("lie.g_pm3_closure", P, [&] {
      auto lc = lie_closure_dim(g_pm3_seeds());
      c.expect("lie.g_pm3_closure", P, lc.stabilized && lc.closure_dim == 15, "closure dimension " + std::to_string(lc.closure_dim));
    });
  }
}

inline void spectrum_checks(Collector& c, const SpectrumPoint& sp, std::uint64_t seed) {
  const auto a = AlphaParam::parse(sp.alpha);
  const std::map<std::string, std::string> P{{"d", std::to_string(sp.d)},
                                             {"alpha", a.to_string()},
                                             {"steps", std::to_string(sp.steps)},
                                             {"trials", std::to_string(sp.trials)}};
  c.guarded("lyapunov.classification", P, [&] {
    SimConfig cfg(sp.d, a);
    cfg.steps = sp.steps;
    cfg.trials = sp.trials;
    cfg.seed = seed;
    auto rep = simulate_spectrum(cfg);
    const auto verdict = classify_spectrum(rep, sp.d, a);
    c.expect("lyapunov.classification", P, verdict == SpectrumVerdict::consistent,
             to_string(verdict) + ", " + std::to_string(rep.zero_set.size()) + " zero of " + std::to_string(sp.d) +
                 ", expected " + std::to_string(expected_zero_count(sp.d, a)));
    const double se = rep.max_stderr();
    c.expect("lyapunov.symmetry", P, rep.symmetric_defect < std::max(5 * se, kExponentResolution),
             "defect " + fmt(rep.symmetric_defect) + ", 5 SE " + fmt(5 * se));
    const auto sig = predicted_signature(sp.d, a);
    c.expect("lyapunov.zero_lower_bound", P,
             static_cast<int>(rep.zero_set.size()) >= std::abs(sig.n_plus - sig.n_minus));
    c.expect("lyapunov.realified_pairing", P, rep.max_pair_gap < std::max(3 * se, kExponentResolution),
             "gap " + fmt(rep.max_pair_gap));
    SimConfig shortcfg = cfg;
    shortcfg.steps = std::min<std::int64_t>(cfg.steps, 2000);
    shortcfg.trials = 2;
    auto r1 = simulate_spectrum(shortcfg), r2 = simulate_spectrum(shortcfg);
    c.expect("lyapunov.determinism", P, r1.per_trial == r2.per_trial);
  });
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace detail

struct SuiteOptions {
  bool timestamp = true;
};

inline ReportSummary summarize(const std::vector<CheckRecord>& checks) {
  ReportSummary s;
  for (const auto& r : checks) {
    (r.status == CheckStatus::pass ? s.pass : r.status == CheckStatus::fail ? s.fail : s.flagged) += 1;
  }
  return s;
}

inline VerificationReport run_verification_suite(const VerificationGrid& grid, const SuiteOptions& opt = {}) {
  detail::validate_grid(grid);
  VerificationReport rep;
  rep.grid = grid;
  if (opt.timestamp) rep.timestamp = detail::utc_timestamp();
  detail::Collector c(rep.checks);
  for (auto [k, ell] : grid.surfaces) detail::surface_checks(c, k, ell);
  if (!grid.alphas.empty()) {
    for (int d : grid.dims) detail::rauzy_checks(c, d);
    for (int d : grid.dims)
      for (const auto& s : grid.alphas) detail::generator_checks(c, d, AlphaParam::parse(s), grid.density);
  }
  for (const auto& sp : grid.spectra) detail::spectrum_checks(c, sp, grid.seed);
  rep.summary = summarize(rep.checks);
  return rep;
}

// ---- serialization ----

inline nlohmann::json to_json(const VerificationGrid& g) {
  nlohmann::json j;
  j["surfaces"] = nlohmann::json::array();
  for (auto [k, ell] : g.surfaces) j["surfaces"].push_back({{"k", k}, {"l", ell}});
  j["dims"] = g.dims;
  j["alphas"] = g.alphas;
  j["density"] = g.density;
  j["spectra"] = nlohmann::json::array();
  for (const auto& s : g.spectra)
    j["spectra"].push_back({{"d", s.d}, {"alpha", s.alpha}, {"steps", s.steps}, {"trials", s.trials}});
  j["seed"] = g.seed;
  return j;
}

inline VerificationGrid grid_from_json(const nlohmann::json& j) {
  VerificationGrid g;
  for (const auto& s : j.at("surfaces")) g.surfaces.emplace_back(s.at("k").get<int>(), s.at("l").get<int>());
  g.dims = j.at("dims").get<std::vector<int>>();
  g.alphas = j.at("alphas").get<std::vector<std::string>>();
  g.density = j.at("density").get<bool>();
  for (const auto& s : j.at("spectra"))
    g.spectra.push_back({s.at("d").get<int>(), s.at("alpha").get<std::string>(), s.at("steps").get<std::int64_t>(),
                         s.at("trials").get<int>()});
  g.seed = j.at("seed").get<std::uint64_t>();
  return g;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = r.tool_version;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  j["grid"] = to_json(r.grid);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"check_id", c.check_id}, {"params", c.params}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["summary"] = {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"flagged", r.summary.flagged}};
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  if (j.value("schema", 0) != kReportSchema) throw UnsupportedFormat("unknown report schema");
  VerificationReport r;
  r.tool_version = j.at("tool_version").get<std::string>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  r.grid = grid_from_json(j.at("grid"));
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("check_id").get<std::string>(), c.at("params").get<std::map<std::string, std::string>>(),
                        parse_status(c.at("status").get<std::string>()), c.at("detail").get<std::string>()});
  }
  const auto& s = j.at("summary");
  r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("flagged").get<int>()};
  return r;
}

inline nlohmann::json to_json(const SpectrumReport& r, std::optional<SpectrumVerdict> verdict = std::nullopt) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["d"] = r.d;
  j["alpha"] = r.alpha;
  j["steps"] = r.steps;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["basis"] = r.basis == FrameBasis::form_adapted ? "form_adapted" : "euclidean";
  j["exponents"] = r.exponents;
  j["stderr"] = r.stderrs;
  j["zero_set"] = r.zero_set;
  j["simple"] = r.simple;
  j["symmetric_defect"] = r.symmetric_defect;
  j["max_pair_gap"] = r.max_pair_gap;
  if (verdict) j["classification"] = to_string(*verdict);
  return j;
}

/// One row per (trial, exponent index); stderr is the standard error of that index.
inline void write_csv(const SpectrumReport& r, std::ostream& os) {
  os << "trial,index,exponent,stderr\n";
  os << std::setprecision(17);
  for (std::size_t t = 0; t < r.per_trial.size(); ++t)
    for (std::size_t i = 0; i < r.per_trial[t].size(); ++i)
      os << t << ',' << i << ',' << r.per_trial[t][i] << ',' << r.stderrs[i] << '\n';
}

enum class ExportFormat { json, csv, dot };

inline ExportFormat parse_format(const std::string& s) {
  if (s == "json") return ExportFormat::json;
  if (s == "csv") return ExportFormat::csv;
  if (s == "dot") return ExportFormat::dot;
  throw UnsupportedFormat("unknown export format '" + s + "'");
}

namespace detail {

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("cannot open '" + path + "' for writing");
  body(os);
  os.flush();
  if (!os) throw IoFailure("write to '" + path + "' failed");
}

}  // namespace detail

inline void export_report(const VerificationReport& r, ExportFormat f, const std::string& path) {
  if (f != ExportFormat::json) throw UnsupportedFormat("verification reports export to json only");
  detail::write_file(path, [&](std::ostream& os) { os << to_json(r).dump(2) << '\n'; });
}

inline void export_report(const SpectrumReport& r, ExportFormat f, const std::string& path,
                          std::optional<SpectrumVerdict> verdict = std::nullopt) {
  if (f == ExportFormat::dot) throw UnsupportedFormat("dot export is for Rauzy diagrams");
  detail::write_file(path, [&](std::ostream& os) {
    if (f == ExportFormat::json) {
      os << to_json(r, verdict).dump(2) << '\n';
    } else {
      write_csv(r, os);
    }
  });
}

inline void export_report(const RauzyDiagram& D, ExportFormat f, const std::string& path) {
  if (f != ExportFormat::dot) throw UnsupportedFormat("Rauzy diagrams export to dot only");
  detail::write_file(path, [&](std::ostream& os) { write_dot(D, os); });
}

inline VerificationReport import_report(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open '" + path + "'");
  try {
    return report_from_json(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception& e) {
    throw UnsupportedFormat(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kzlab

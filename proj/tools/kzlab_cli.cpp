// kzlab_cli: command-line front end for the kzlab library.
//
// Exit codes: 0 when every check passes, 1 when a check fails or a spectrum
// is not consistent, 2 on usage or configuration errors.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/kzlab.hpp"

using namespace kzlab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<int> k, ell, r, d;
  std::vector<std::string> alpha;
  std::int64_t steps = 100000;
  int trials = 10;
  std::uint64_t seed = 2024;
  int qr_cadence = 8;
  std::string json_path, csv_path, dot_path;
  std::size_t bound = 100000;
  bool no_timestamp = false;
  bool no_density = false;
  bool with_spectrum = false;
  bool euclidean = false;
};

template <typename T>
T single(const std::vector<T>& v, const char* flag) {
  if (v.size() != 1) throw InvalidArgument(std::string("exactly one ") + flag + " value is required");
  return v.front();
}

// (d, alpha) from --d/--alpha, or d = l-1 and alpha = r/2k from --k/--ell/--r
std::pair<int, AlphaParam> generator_point(const Options& o) {
  if (!o.alpha.empty()) return {single(o.d, "--d"), AlphaParam::parse(single(o.alpha, "--alpha"))};
  if (!o.r.empty()) {
    return {single(o.ell, "--ell") - 1, AlphaParam::from_rk(single(o.r, "--r"), single(o.k, "--k"))};
  }
  throw InvalidArgument("give --d and --alpha a/b, or --k --ell --r");
}

void emit_json(const Options& o, const json& j) {
  if (!o.json_path.empty()) {
    detail::write_file(o.json_path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

int cmd_profile(const Options& o) {
  SurfaceParams sp(single(o.k, "--k"), single(o.ell, "--ell"));
  auto prof = singularity_profile(sp);
  std::cout << "surface M_{" << sp.k << "," << sp.ell << "}: " << 2 * sp.k << " copies of the " << sp.ell << "-gon\n"
            << "  genus            " << prof.genus << "\n"
            << "  M points         " << prof.m_points << " of cone angle 2pi*" << prof.m_angle_turns << "\n"
            << "  A points         " << prof.a_points << " of cone angle 2pi*" << prof.a_angle_turns << "\n"
            << "  cone orders      " << rational_list(prof.cone_orders) << "\n"
            << "  Gauss-Bonnet     " << (prof.gauss_bonnet_holds() ? "pass" : "FAIL") << " (sum " << prof.order_sum()
            << ", 2g-2 = " << 2 * prof.genus - 2 << ")\n"
            << "  stratum label    " << rational_list(prof.stratum_label_orders)
            << (prof.stratum_label_matches() ? "  [matches]" : "  [flagged: differs from computed orders]") << "\n";
  json j{{"k", sp.k},
         {"l", sp.ell},
         {"genus", prof.genus},
         {"m_points", prof.m_points},
         {"a_points", prof.a_points},
         {"gauss_bonnet", prof.gauss_bonnet_holds()},
         {"stratum_label_matches", prof.stratum_label_matches()}};
  for (const auto& c : prof.cone_orders) j["cone_orders"].push_back(c.to_string());
  emit_json(o, j);
  return prof.gauss_bonnet_holds() ? kExitPass : kExitFail;
}

int cmd_chars(const Options& o) {
  const int k = single(o.k, "--k"), ell = single(o.ell, "--ell");
  auto T = character_table(k, ell);
  auto H = decompose_homology(k, ell);
  const bool ortho = T.orthonormal();
  std::cout << "G of order " << 4 * k * ell << ": " << T.classes.size() << " conjugacy classes, " << T.rows.size()
            << " irreducible characters\n";
  for (const auto& row : T.rows) std::cout << "  " << std::setw(14) << std::left << row.name << " dim " << row.dim << "\n";
  std::cout << "orthonormal          " << (ortho ? "yes" : "NO") << "\n"
            << "sum of dim^2         " << T.sum_of_squared_dims() << "\n"
            << "chi_ab identity      " << (H.ab_identity_holds ? "holds" : "FAILS") << "\n"
            << "chi_ab(id) = 2g      " << H.chi_ab_identity << " = " << 2 * H.genus << "\n"
            << "H_r dimensions      ";
  for (auto [r, dim] : H.hr_dims) std::cout << " H_" << r << ":" << dim;
  std::cout << "\nGalois orbits        " << galois_orbits(k, ell).size() << "\n";
  json j{{"k", k}, {"l", ell}, {"classes", T.classes.size()}, {"orthonormal", ortho},
         {"sum_of_squared_dims", T.sum_of_squared_dims()}, {"ab_identity", H.ab_identity_holds},
         {"genus", H.genus}};
  for (const auto& row : T.rows) j["characters"].push_back({{"name", row.name}, {"dim", row.dim}});
  emit_json(o, j);
  const bool ok = ortho && T.sum_of_squared_dims() == 4LL * k * ell && H.ab_identity_holds &&
                  H.chi_ab_identity == 2LL * H.genus;
  return ok ? kExitPass : kExitFail;
}

int cmd_diagram(const Options& o) {
  const int d = single(o.d, "--d");
  auto D = build_diagram(d);
  auto loops = elementary_loops(D);
  auto classes = loop_classes(loops);
  std::cout << "Rauzy diagram D_" << d << ": " << D.size() << " vertices, " << 2 * D.size() << " arrows\n"
            << "elementary loops: " << loops.size() << " in " << classes.size() << " (type, winner) classes\n";
  if (d <= 4) {
    for (std::size_t v = 0; v < D.size(); ++v) {
      auto [wt, wb] = D.winners(static_cast<int>(v));
      std::cout << "  " << std::setw(6) << std::left << (D.words[v].empty() ? "*" : D.words[v]) << D.vertices[v].to_string()
                << "  winners t:" << wt << " b:" << wb << "\n";
    }
  }
  if (!o.dot_path.empty()) export_report(D, ExportFormat::dot, o.dot_path);
  json j{{"d", d}, {"vertices", D.size()}, {"loops", loops.size()}, {"loop_classes", classes.size()}};
  emit_json(o, j);
  return kExitPass;
}

int cmd_generators(const Options& o) {
  auto [d, a] = generator_point(o);
  auto G = build_generators(d, a);
  auto Q = build_form(d, a);
  bool all_inv = true;
  json j{{"d", d}, {"alpha", a.to_string()}};
  for (std::size_t i = 0; i < G.letters.size(); ++i) {
    for (auto kind : {GeneratorKind::top, GeneratorKind::bottom}) {
      const auto& L = kind == GeneratorKind::top ? G.top[i] : G.bottom[i];
      const bool inv = Q.invariant_under(L);
      all_inv = all_inv && inv;
      std::cout << "L^" << kind_letter(kind) << "_" << G.letters[i] << (inv ? "  (preserves Q)" : "  (DOES NOT preserve Q)")
                << "\n"
                << L.to_string() << "\n";
      j["generators"].push_back({{"p", G.letters[i]}, {"kind", std::string(1, kind_letter(kind))},
                                 {"matrix", L.to_string()}, {"preserves_form", inv}});
    }
  }
  emit_json(o, j);
  return all_inv ? kExitPass : kExitFail;
}

int cmd_form(const Options& o) {
  auto [d, a] = generator_point(o);
  auto Q = build_form(d, a);
  auto D = diagonalize_form(d, a);
  auto pred = predicted_signature(d, a);
  std::cout << "Q_alpha for d=" << d << ", alpha=" << a.to_string() << "\n" << Q.entries.to_string() << "\n"
            << "signature (n-, n+, n0) = (" << D.signature.n_minus << ", " << D.signature.n_plus << ", "
            << D.signature.n_zero << "), predicted (" << pred.n_minus << ", " << pred.n_plus << ", " << pred.n_zero
            << ")\n";
  std::cout << "  s   Q(w_s, w_s)        (l/2)(1 - tan(pi a) cot(pi s/l))\n";
  for (std::size_t i = 0; i < D.s_values.size(); ++i) {
    std::cout << "  " << std::setw(3) << D.s_values[i] << " " << std::setw(18) << std::setprecision(12)
              << D.eigenvalues_float[i] << " " << D.predicted[i] << "\n";
  }
  bool hodge_ok = true;
  if (!o.k.empty() && !o.r.empty()) {
    auto h = hodge_gram(SurfaceParams(single(o.k, "--k"), d + 1), single(o.r, "--r"));
    hodge_ok = h.rescaled.entries == Q.entries;
    std::cout << "Hodge-derived Gram matrix equals Q entrywise: " << (hodge_ok ? "yes" : "NO") << "\n";
  }
  json j{{"d", d}, {"alpha", a.to_string()}, {"entries", Q.entries.to_string()},
         {"signature", {D.signature.n_minus, D.signature.n_plus, D.signature.n_zero}},
         {"predicted", {pred.n_minus, pred.n_plus, pred.n_zero}}, {"eigenvalues", D.eigenvalues_float}};
  emit_json(o, j);
  return D.signature == pred && hodge_ok ? kExitPass : kExitFail;
}

int cmd_density(const Options& o) {
  auto [d, a] = generator_point(o);
  auto v = density_verdict(d, a, std::min<std::size_t>(o.bound, 20000));
  std::cout << "d=" << d << " alpha=" << a.to_string() << ": " << to_string(v.verdict) << "\n"
            << "signature (n-, n+, n0) = (" << v.signature.n_minus << ", " << v.signature.n_plus << ", "
            << v.signature.n_zero << ")\n";
  for (const auto& n : v.notes) std::cout << "  " << n << "\n";
  json j{{"d", d}, {"alpha", a.to_string()}, {"verdict", to_string(v.verdict)}, {"notes", v.notes},
         {"certificate_conflict", v.certificate_conflict}};
  if (d == 2) {
    auto g = enumerate_d2_group(a, o.bound);
    if (g.order) {
      std::cout << "<L_-1, L_1> is finite of order " << *g.order << "\n";
      j["group_order"] = *g.order;
    } else {
      std::cout << "<L_-1, L_1> exceeds " << o.bound << " elements\n";
    }
    auto s = special_element_d2(a);
    std::cout << "special element L^b_-1 L^t_1: trace " << s.trace << ", " << to_string(s.classification)
              << (s.order ? ", order " + std::to_string(*s.order) : std::string()) << "\n";
  }
  if (v.certificate_conflict) std::cout << "flagged: computed certificate contradicts the table verdict\n";
  emit_json(o, j);
  return kExitPass;
}

int cmd_spectrum(const Options& o) {
  auto [d, a] = generator_point(o);
  SimConfig cfg(d, a);
  cfg.steps = o.steps;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.qr_cadence = o.qr_cadence;
  if (o.euclidean) cfg.basis = FrameBasis::euclidean;
  auto rep = simulate_spectrum(cfg);
  auto verdict = classify_spectrum(rep, d, a);
  std::cout << "d=" << d << " alpha=" << a.to_string() << " steps=" << o.steps << " trials=" << o.trials
            << " seed=" << o.seed << "\n";
  for (int i = 0; i < d; ++i) {
    const bool zero = std::find(rep.zero_set.begin(), rep.zero_set.end(), i) != rep.zero_set.end();
    std::cout << "  lambda_" << i + 1 << " = " << std::setw(14) << std::setprecision(6) << rep.exponents[i] << " +- "
              << rep.stderrs[i] << (zero ? "  [zero]" : "") << "\n";
  }
  std::cout << "zeros " << rep.zero_set.size() << " (expected " << expected_zero_count(d, a) << "), simple "
            << (rep.simple ? "yes" : "no") << ", symmetry defect " << rep.symmetric_defect << "\n"
            << "classification: " << to_string(verdict) << "\n";
  if (!o.csv_path.empty()) export_report(rep, ExportFormat::csv, o.csv_path);
  if (!o.json_path.empty()) export_report(rep, ExportFormat::json, o.json_path, verdict);
  return verdict == SpectrumVerdict::consistent ? kExitPass : kExitFail;
}

VerificationGrid grid_from_options(const Options& o) {
  const bool surface_flags = !o.k.empty() || !o.ell.empty();
  const bool generator_flags = !o.d.empty() || !o.alpha.empty() || !o.r.empty();
  if (!surface_flags && !generator_flags) {
    auto g = default_grid();
    g.density = !o.no_density;
    g.seed = o.seed;
    return g;
  }
  VerificationGrid g;
  g.density = !o.no_density;
  g.seed = o.seed;
  std::vector<int> ks = o.k, ells = o.ell;
  if (ks.empty()) ks = {1, 2, 3, 4, 5, 6, 7, 8};
  if (ells.empty()) ells = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  if (surface_flags && o.r.empty()) {
    for (int k : ks)
      for (int ell : ells) g.surfaces.emplace_back(k, ell);
  }
  if (!o.r.empty()) {
    // alpha = r/2k at d = l-1
    for (int k : ks)
      for (int ell : ells) {
        g.surfaces.emplace_back(k, ell);
        for (int r : o.r) {
          if (r <= 0 || r >= k) throw InvalidGrid("--r needs 0 < r < k");
          g.dims.push_back(ell - 1);
          g.alphas.push_back(AlphaParam::from_rk(r, k).to_string());
        }
      }
  } else if (generator_flags) {
    g.dims = o.d.empty() ? std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12} : o.d;
    g.alphas = o.alpha.empty() ? standard_alphas(8) : o.alpha;
  }
  // dedupe while keeping order
  auto dedupe = [](auto& v) {
    std::decay_t<decltype(v)> out;
    for (const auto& x : v)
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    v = out;
  };
  dedupe(g.surfaces);
  dedupe(g.dims);
  dedupe(g.alphas);
  for (const auto& a : g.alphas) (void)AlphaParam::parse(a);
  if (o.with_spectrum) {
    for (int d : g.dims)
      for (const auto& a : g.alphas) g.spectra.push_back({d, a, o.steps, o.trials});
  }
  return g;
}

int cmd_verify(const Options& o) {
  auto grid = grid_from_options(o);
  auto rep = run_verification_suite(grid, {!o.no_timestamp});
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::pass) continue;
    std::cout << to_string(c.status) << "  " << c.check_id << " " << json(c.params).dump() << "  " << c.detail << "\n";
  }
  for (const auto& c : rep.checks) {
    if (c.check_id == "density.order") std::cout << c.detail << ": " << to_string(c.status) << "\n";
  }
  std::cout << "checks: " << rep.checks.size() << "  pass " << rep.summary.pass << "  fail " << rep.summary.fail
            << "  flagged " << rep.summary.flagged << "\n";
  if (!o.json_path.empty()) export_report(rep, ExportFormat::json, o.json_path);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kzlab: surfaces M_{k,l}, Rauzy diagrams, the generators L_p and their invariant Hermitian form"};
  app.require_subcommand(1);
  Options o;

  auto add_surface = [&](CLI::App* s) {
    s->add_option("--k", o.k, "number of copies is 2k")->check(CLI::PositiveNumber);
    s->add_option("--ell", o.ell, "polygon side count l")->check(CLI::Range(3, 64));
  };
  auto add_generator = [&](CLI::App* s) {
    add_surface(s);
    s->add_option("--r", o.r, "alpha = r/2k, with d = l-1");
    s->add_option("--d", o.d, "alphabet size d")->check(CLI::Range(2, 64));
    s->add_option("--alpha", o.alpha, "exact fraction a/b with 0 < a/b < 1/2");
  };
  auto add_json = [&](CLI::App* s) { s->add_option("--json", o.json_path, "write a JSON summary to PATH"); };

  auto* profile = app.add_subcommand("profile", "singularity and genus data of M_{k,l}");
  add_surface(profile);
  add_json(profile);
  auto* chars = app.add_subcommand("chars", "character table and homology decomposition");
  add_surface(chars);
  add_json(chars);
  auto* diagram = app.add_subcommand("diagram", "hyperelliptic Rauzy diagram D_d");
  diagram->add_option("--d", o.d, "alphabet size")->check(CLI::Range(2, 20));
  diagram->add_option("--dot", o.dot_path, "write Graphviz DOT to PATH");
  add_json(diagram);
  auto* generators = app.add_subcommand("generators", "exact matrices L^t_p, L^b_p");
  add_generator(generators);
  add_json(generators);
  auto* form = app.add_subcommand("form", "invariant Hermitian form, signature and diagonalization");
  add_generator(form);
  add_json(form);
  auto* density = app.add_subcommand("density", "density verdict and finite-group certificates");
  add_generator(density);
  density->add_option("--bound", o.bound, "enumeration bound");
  add_json(density);
  auto* spectrum = app.add_subcommand("spectrum", "Monte-Carlo Lyapunov spectrum of the random product");
  add_generator(spectrum);
  spectrum->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
  spectrum->add_option("--trials", o.trials)->check(CLI::Range(2, 100000));
  spectrum->add_option("--seed", o.seed);
  spectrum->add_option("--qr-cadence", o.qr_cadence)->check(CLI::PositiveNumber);
  spectrum->add_flag("--euclidean", o.euclidean, "re-orthonormalize in the standard basis instead of the form basis");
  spectrum->add_option("--csv", o.csv_path, "per-trial exponents as CSV");
  add_json(spectrum);
  auto* verify = app.add_subcommand("verify", "run the verification suite over a parameter grid");
  add_generator(verify);
  verify->add_option("--steps", o.steps, "steps per spectrum point")->check(CLI::PositiveNumber);
  verify->add_option("--trials", o.trials)->check(CLI::Range(2, 100000));
  verify->add_option("--seed", o.seed);
  verify->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp so reports are byte-identical");
  verify->add_flag("--no-density", o.no_density, "skip density verdicts and enumerations");
  verify->add_flag("--with-spectrum", o.with_spectrum, "add a spectrum check at each (d, alpha) point");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*profile) return cmd_profile(o);
    if (*chars) return cmd_chars(o);
    if (*diagram) return cmd_diagram(o);
    if (*generators) return cmd_generators(o);
    if (*form) return cmd_form(o);
    if (*density) return cmd_density(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*verify) return cmd_verify(o);
  } catch (const InexactInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidGrid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

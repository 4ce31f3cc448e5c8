#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "kzlab/report/report.hpp"

using namespace kzlab;

namespace {

VerificationGrid small_grid() {
  VerificationGrid g;
  g.surfaces = {{1, 4}, {2, 5}, {3, 6}};
  g.dims = {2, 3, 4};
  g.alphas = {"1/4", "1/5", "3/10"};
  g.spectra = {{2, "2/5", 5000, 3}};
  return g;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kzlab_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

const CheckRecord* find(const VerificationReport& r, const std::string& id, const std::map<std::string, std::string>& p) {
  for (const auto& c : r.checks)
    if (c.check_id == id && c.params == p) return &c;
  return nullptr;
}

}  // namespace

TEST(Suite, QuarterAtDTwoIncludesOrder96) {
  VerificationGrid g;
  g.dims = {2};
  g.alphas = {"1/4"};
  auto rep = run_verification_suite(g, {false});
  auto* c = find(rep, "density.order", {{"d", "2"}, {"alpha", "1/4"}});
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::pass);
  EXPECT_EQ(c->detail, "order=96");
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Suite, EachCheckOncePerGridPoint) {
  auto rep = run_verification_suite(small_grid(), {false});
  std::set<std::pair<std::string, std::map<std::string, std::string>>> seen;
  for (const auto& c : rep.checks) EXPECT_TRUE(seen.insert({c.check_id, c.params}).second) << c.check_id;
  EXPECT_EQ(rep.summary, summarize(rep.checks));
  EXPECT_EQ(rep.summary.fail, 0);
  // every generator point carries the same core checks
  for (int d : {2, 3, 4})
    for (const char* a : {"1/4", "1/5", "3/10"})
      for (const char* id : {"kz.form_invariance", "kz.signature", "kz.eigenvalues", "density.verdict"})
        EXPECT_NE(find(rep, id, {{"d", std::to_string(d)}, {"alpha", a}}), nullptr) << id << " " << d << " " << a;
}

TEST(Suite, StratumLabelFlaggedOnlyAboveKOne) {
  VerificationGrid g;
  for (int k = 1; k <= 3; ++k)
    for (int ell = 3; ell <= 6; ++ell) g.surfaces.emplace_back(k, ell);
  auto rep = run_verification_suite(g, {false});
  for (const auto& c : rep.checks) {
    if (c.check_id != "surface.stratum_label") continue;
    const bool k_one = c.params.at("k") == "1";
    EXPECT_EQ(c.status, k_one ? CheckStatus::pass : CheckStatus::flagged);
  }
  for (const auto& c : rep.checks) {
    if (c.check_id == "surface.gauss_bonnet") {
      EXPECT_EQ(c.status, CheckStatus::pass);
    }
  }
}

TEST(Suite, OrderTenCertificateIsFlagged) {
  VerificationGrid g;
  g.dims = {2};
  g.alphas = {"1/10"};
  auto rep = run_verification_suite(g, {false});
  auto* c = find(rep, "density.verdict", {{"d", "2"}, {"alpha", "1/10"}});
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::flagged);
  EXPECT_EQ(find(rep, "kz.d2_finite_order", {{"d", "2"}, {"alpha", "1/10"}})->status, CheckStatus::flagged);
}

TEST(Suite, InvalidGrids) {
  EXPECT_THROW(run_verification_suite(VerificationGrid{}), InvalidGrid);
  VerificationGrid g;
  g.surfaces = {{9, 5}};
  EXPECT_THROW(run_verification_suite(g), InvalidGrid);
  g.surfaces = {};
  g.dims = {13};
  g.alphas = {"1/4"};
  EXPECT_THROW(run_verification_suite(g), InvalidGrid);
  g.dims = {3};
  g.alphas = {"3/4"};
  EXPECT_THROW(run_verification_suite(g), InvalidGrid);
  g.alphas = {"0.25"};
  EXPECT_THROW(run_verification_suite(g), InexactInput);
}

TEST(Suite, DefaultGridIsWithinBounds) {
  auto g = default_grid();
  EXPECT_EQ(g.surfaces.size(), 80u);
  EXPECT_EQ(g.dims.back(), 12);
  EXPECT_NO_THROW(detail::validate_grid(g));
}

TEST(Export, JsonRoundTripAndByteStability) {
  auto rep = run_verification_suite(small_grid(), {false});
  EXPECT_EQ(report_from_json(to_json(rep)), rep);
  EXPECT_EQ(to_json(rep)["schema"], 1);
  const auto p1 = temp_path("r1.json"), p2 = temp_path("r2.json");
  export_report(rep, ExportFormat::json, p1);
  export_report(run_verification_suite(small_grid(), {false}), ExportFormat::json, p2);
  EXPECT_EQ(slurp(p1), slurp(p2));
  EXPECT_EQ(import_report(p1), rep);
  auto stamped = run_verification_suite(small_grid(), {true});
  ASSERT_TRUE(stamped.timestamp.has_value());
  EXPECT_EQ(report_from_json(to_json(stamped)), stamped);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Export, SpectrumCsvShape) {
  SimConfig cfg(3, AlphaParam(1, 5));
  cfg.steps = 2000;
  cfg.trials = 4;
  auto rep = simulate_spectrum(cfg);
  std::ostringstream os;
  write_csv(rep, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "trial,index,exponent,stderr");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
  }
  EXPECT_EQ(rows, 4 * 3);
  const auto path = temp_path("s.json");
  export_report(rep, ExportFormat::json, path, classify_spectrum(rep, 3, AlphaParam(1, 5)));
  auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["exponents"].size(), 3u);
  EXPECT_TRUE(j.contains("classification"));
  std::filesystem::remove(path);
}

TEST(Export, DotOfD3) {
  const auto path = temp_path("d3.dot");
  export_report(build_diagram(3), ExportFormat::dot, path);
  const auto s = slurp(path);
  EXPECT_EQ(s.rfind("digraph", 0), 0u);
  std::size_t nodes = 0, arrows = 0;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find("->") != std::string::npos) {
      ++arrows;
    } else if (line.find("[label=") != std::string::npos) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(arrows, 6u);
  std::filesystem::remove(path);
}

TEST(Export, Errors) {
  EXPECT_THROW(parse_format("xml"), UnsupportedFormat);
  VerificationGrid g;
  g.surfaces = {{1, 3}};
  auto rep = run_verification_suite(g, {false});
  EXPECT_THROW(export_report(rep, ExportFormat::csv, temp_path("x.csv")), UnsupportedFormat);
  EXPECT_THROW(export_report(build_diagram(3), ExportFormat::json, temp_path("x.json")), UnsupportedFormat);
  EXPECT_THROW(export_report(rep, ExportFormat::json, "/nonexistent-dir/report.json"), IoFailure);
  EXPECT_THROW(import_report("/nonexistent-dir/report.json"), IoFailure);
  const auto bad = temp_path("bad.json");
  std::ofstream(bad) << "{\"schema\": 1}";
  EXPECT_THROW(import_report(bad), UnsupportedFormat);
  std::filesystem::remove(bad);
}

TEST(Export, FailingCheckSetsExitCode) {
  VerificationReport r;
  r.checks = {{"x", {}, CheckStatus::pass, ""}, {"y", {}, CheckStatus::fail, "broken"}};
  r.summary = summarize(r.checks);
  EXPECT_EQ(r.exit_code(), 1);
  r.checks[1].status = CheckStatus::flagged;
  r.summary = summarize(r.checks);
  EXPECT_EQ(r.exit_code(), 0);
}

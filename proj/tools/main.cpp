#include "syzstab/bounds.hpp"
#include "syzstab/construct.hpp"
#include "syzstab/criterion.hpp"
#include "syzstab/io.hpp"
#include "syzstab/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace {

using syzstab::io::json;

constexpr int kExitStable = 0;
constexpr int kExitSemistable = 10;
constexpr int kExitUnstable = 20;
constexpr int kExitUsage = 64;
constexpr int kExitResource = 70;
constexpr int kExitImpossible = 75;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << doc.dump(2) << "\n";
}

/// Runs f(i) for i in [0, count) on up to `workers` threads; results land in
/// a vector indexed by i so output order never depends on scheduling.
template <typename Result>
std::vector<Result> parallel_map(int count, int workers,
                                 const std::function<Result(int)>& f) {
  std::vector<Result> results(static_cast<size_t>(count));
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<size_t>(i)] = f(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int used = std::min(workers, count);
  pool.reserve(static_cast<size_t>(used));
  for (int t = 0; t < used; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        results[static_cast<size_t>(i)] = f(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return results;
}

int status_exit_code(syzstab::Status s) {
  switch (s) {
    case syzstab::Status::Stable: return kExitStable;
    case syzstab::Status::StrictlySemistable: return kExitSemistable;
    case syzstab::Status::Unstable: return kExitUnstable;
  }
  return kExitUsage;
}

int run_bounds(int n, int d, int c_flag, const std::string& output) {
  const syzstab::BoundReport report = syzstab::make_bound_report(n, d);
  json doc;
  doc["n"] = report.n;
  doc["d"] = report.d;
  doc["p_of_d"] = syzstab::io::rational_json(report.p_of_d);
  doc["threshold"] = syzstab::io::rational_json(report.threshold);
  doc["threshold_is_integer"] = report.threshold_is_integer;

  json table = json::array();
  const long long top = numerator(syzstab::eval_p(n, syzstab::Rational(d)))
                            .convert_to<long long>();
  for (long long m = n + 1; m <= top; ++m) {
    json row;
    row["m"] = m;
    row["class"] = to_string(syzstab::classify_by_threshold(n, d, m));
    table.push_back(std::move(row));
  }
  doc["classification"] = std::move(table);

  if (c_flag > 0) {
    json gap;
    gap["c"] = c_flag;
    gap["holds"] = syzstab::flenner_gap_holds(n, d, c_flag);
    doc["flenner_gap"] = std::move(gap);
  }
  doc["version"] = syzstab::kVersion;
  write_output(doc, output);
  return 0;
}

int run_check(const std::string& input, const std::string& output,
              const std::string& mode, const std::string& search, int budget) {
  const json in = syzstab::io::parse_json_text(read_input(input));
  const syzstab::io::MonomialSetDocument doc = syzstab::io::parse_monomial_set(in);

  std::string used_mode = mode;
  if (mode == "auto") {
    used_mode = doc.set.uniform_degree() ? "equal" : "mixed";
  }

  syzstab::Verdict verdict;
  if (used_mode == "equal") {
    const auto search_mode = search == "full" ? syzstab::ColonSearch::FullSweep
                                              : syzstab::ColonSearch::PrunedPairGcd;
    verdict = syzstab::check_equal_degree(doc.set, search_mode);
  } else {
    syzstab::MixedOptions opts;
    opts.subset_budget = budget;
    verdict = syzstab::check_mixed(doc.set, opts);
  }

  json echo;
  echo["n"] = doc.set.n();
  echo["m"] = doc.set.size();
  if (doc.set.uniform_degree()) echo["d"] = *doc.set.uniform_degree();
  if (!doc.label.empty()) echo["label"] = doc.label;

  write_output(syzstab::io::serialize_verdict(verdict, echo, used_mode), output);
  return status_exit_code(verdict.status);
}

json construction_document(const syzstab::Construction& c,
                           syzstab::Strictness req) {
  json doc;
  doc["set"] = syzstab::io::serialize_monomial_set(c.set);
  doc["trace"] = syzstab::io::serialize_trace(c.trace);
  doc["status"] = to_string(c.verdict.status);
  doc["require"] = to_string(req);
  doc["version"] = syzstab::kVersion;
  return doc;
}

int run_construct(int n, int d, int m, const std::string& require,
                  const std::string& output) {
  const syzstab::Strictness req = require == "nonstrict"
                                      ? syzstab::Strictness::NonStrict
                                      : syzstab::Strictness::Strict;
  const syzstab::Construction c = syzstab::construct(n, d, m, req);
  write_output(construction_document(c, req), output);
  return 0;
}

struct SweepRow {
  int m = 0;
  bool ok = false;
  bool exceptional = false;
  std::string rule;
  std::string status;
  std::string error;
};

int run_sweep(int n, int d, int m_min_flag, int m_max_flag,
              const std::string& require, int workers, const std::string& output) {
  if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
  const syzstab::Strictness req = require == "nonstrict"
                                      ? syzstab::Strictness::NonStrict
                                      : syzstab::Strictness::Strict;
  const long long top = numerator(syzstab::eval_p(n, syzstab::Rational(d)))
                            .convert_to<long long>();
  const int m_min = m_min_flag > 0 ? m_min_flag : n + 1;
  const int m_max = m_max_flag > 0 ? m_max_flag : static_cast<int>(top);
  if (m_min > m_max) throw std::invalid_argument("empty m range");

  const int count = m_max - m_min + 1;
  const std::function<SweepRow(int)> work = [&](int i) {
    SweepRow row;
    row.m = m_min + i;
    try {
      const syzstab::Construction c = syzstab::construct(n, d, row.m, req);
      row.ok = true;
      row.rule = c.trace.rule;
      row.status = to_string(c.verdict.status);
    } catch (const syzstab::ImpossibleConstructionError&) {
      // The one provably impossible strict case: report the semistable
      // family instead and flag it.
      const syzstab::Construction c =
          syzstab::construct(n, d, row.m, syzstab::Strictness::NonStrict);
      row.ok = true;
      row.exceptional = true;
      row.rule = c.trace.rule;
      row.status = to_string(c.verdict.status);
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    return row;
  };
  const std::vector<SweepRow> rows = parallel_map<SweepRow>(count, workers, work);

  bool all_ok = true;
  json out_rows = json::array();
  for (const SweepRow& row : rows) {
    json r;
    r["m"] = row.m;
    r["ok"] = row.ok;
    if (row.ok) {
      r["rule"] = row.rule;
      r["status"] = row.status;
      if (row.exceptional) r["exceptional"] = true;
    } else {
      r["error"] = row.error;
      all_ok = false;
    }
    out_rows.push_back(std::move(r));
  }
  json doc;
  doc["n"] = n;
  doc["d"] = d;
  doc["require"] = to_string(req);
  doc["rows"] = std::move(out_rows);
  doc["all_ok"] = all_ok;
  doc["version"] = syzstab::kVersion;
  write_output(doc, output);
  return all_ok ? 0 : 1;
}

int run_exhaustive(int n, int d, int m, long long guard, int workers,
                   const std::string& output) {
  syzstab::ExhaustiveOptions opts;
  opts.guard = guard;
  const auto results = syzstab::exhaustive_classify(n, d, m, opts);

  // Classification already ran; the worker flag only matters for huge
  // listings, so reuse it for serialization of the rows.
  const int count = static_cast<int>(results.size());
  const std::function<json(int)> work = [&](int i) {
    const auto& [set, verdict] = results[static_cast<size_t>(i)];
    json row;
    row["set"] = syzstab::io::serialize_monomial_set(set);
    row["status"] = to_string(verdict.status);
    row["extremal_value"] = verdict.extremal_value
                                ? syzstab::io::rational_json(*verdict.extremal_value)
                                : json(nullptr);
    return row;
  };
  const std::vector<json> rows = parallel_map<json>(count, workers, work);

  json summary = json::object();
  for (const auto& [set, verdict] : results) {
    const std::string key = to_string(verdict.status);
    summary[key] = summary.value(key, 0) + 1;
  }
  json doc;
  doc["n"] = n;
  doc["d"] = d;
  doc["m"] = m;
  doc["count"] = count;
  doc["results"] = rows;
  doc["summary"] = std::move(summary);
  doc["version"] = syzstab::kVersion;
  write_output(doc, output);
  return 0;
}

int run_decompose(const std::string& input, const std::string& output) {
  const json in = syzstab::io::parse_json_text(read_input(input));
  const syzstab::ExteriorElement w = syzstab::io::parse_exterior(in);
  json doc;
  doc["m"] = w.m();
  doc["r"] = w.r();
  if (w.is_zero()) {
    doc["zero"] = true;
    doc["version"] = syzstab::kVersion;
    write_output(doc, output);
    return 0;
  }
  const bool closed = w.r() >= 1 && koszul_delta(w).is_zero();
  const bool decomposable = syzstab::is_decomposable(w);
  doc["delta_closed"] = closed;
  doc["decomposable"] = decomposable;
  if (decomposable) {
    json factors = json::array();
    for (const auto& row : syzstab::recover_factors(w)) {
      json vec = json::array();
      for (const auto& x : row) vec.push_back(syzstab::io::rational_json(x));
      factors.push_back(std::move(vec));
    }
    doc["factors"] = std::move(factors);
  }
  if (closed && decomposable) {
    const syzstab::IndexFamilies families = syzstab::extract_index_families(w);
    doc["families"] = families.families;
  } else {
    doc["families"] = nullptr;
  }
  doc["version"] = syzstab::kVersion;
  write_output(doc, output);
  return 0;
}

int run_secant(const std::string& input, const std::string& output) {
  const json in = syzstab::io::parse_json_text(read_input(input));
  json doc;
  syzstab::QuadricFunctional lambda;
  std::optional<syzstab::LinearForm> factor;
  if (in.contains("matrix")) {
    const syzstab::RationalMatrix v = syzstab::io::parse_matrix(in);
    lambda = syzstab::functional_from_subspace(v);
    factor = syzstab::find_linear_factor(v);
  } else if (in.contains("functional")) {
    lambda = syzstab::io::parse_functional(in);
    factor = syzstab::linear_factor_from_functional(lambda);
  } else {
    throw std::invalid_argument("secant input needs \"matrix\" or \"functional\"");
  }

  const syzstab::SecantStatus status = syzstab::secant_stability_test(lambda);
  doc["status"] = to_string(status);
  doc["catalecticant_rank"] = syzstab::catalecticant_rank(lambda);
  json values = json::array();
  for (const auto& x : lambda.values) values.push_back(syzstab::io::rational_json(x));
  doc["functional"] = std::move(values);
  if (factor) {
    json f = json::array();
    for (const auto& x : *factor) f.push_back(syzstab::io::rational_json(x));
    doc["linear_factor"] = std::move(f);
  } else {
    doc["linear_factor"] = nullptr;
  }
  doc["version"] = syzstab::kVersion;
  write_output(doc, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability certification for monomial syzygy data"};
  app.set_version_flag("--version", syzstab::kVersion);
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "Dimension counts, the stability threshold, and the gap test");
  int b_n = 0, b_d = 0, b_c = 0;
  std::string b_out;
  bounds->add_option("--n", b_n, "ambient dimension (>= 2)")->required();
  bounds->add_option("--d", b_d, "degree (>= 2)")->required();
  bounds->add_option("--c", b_c, "codimension for the gap inequality (1..n-1)");
  bounds->add_option("--output", b_out, "output path (default stdout)");

  // check
  auto* check = app.add_subcommand(
      "check", "Certify (semi)stability of a monomial family from a document");
  std::string c_in, c_out, c_mode = "auto", c_search = "pruned";
  int c_budget = 20;
  check->add_option("--input", c_in, "input path (default stdin)");
  check->add_option("--output", c_out, "output path (default stdout)");
  check->add_option("--mode", c_mode, "auto | equal | mixed")
      ->check(CLI::IsMember({"auto", "equal", "mixed"}));
  check->add_option("--search", c_search,
                    "equal-degree search: pruned | full (second oracle)")
      ->check(CLI::IsMember({"pruned", "full"}));
  check->add_option("--budget", c_budget, "subset budget for the mixed check");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Build a verified stable (or semistable) monomial family");
  int k_n = 0, k_d = 0, k_m = 0;
  std::string k_require = "strict", k_out;
  construct->add_option("--n", k_n, "ambient dimension (>= 1)")->required();
  construct->add_option("--d", k_d, "degree (>= 1)")->required();
  construct->add_option("--m", k_m, "family dimension")->required();
  construct->add_option("--require", k_require, "strict | nonstrict")
      ->check(CLI::IsMember({"strict", "nonstrict"}));
  construct->add_option("--output", k_out, "output path (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Construct and verify every admissible m for fixed (n, d)");
  int s_n = 0, s_d = 0, s_mmin = 0, s_mmax = 0, s_workers = 1;
  std::string s_require = "strict", s_out;
  sweep->add_option("--n", s_n, "ambient dimension (>= 2)")->required();
  sweep->add_option("--d", s_d, "degree (>= 1)")->required();
  sweep->add_option("--m-min", s_mmin, "lower end of the m range");
  sweep->add_option("--m-max", s_mmax, "upper end of the m range");
  sweep->add_option("--require", s_require, "strict | nonstrict")
      ->check(CLI::IsMember({"strict", "nonstrict"}));
  sweep->add_option("--workers", s_workers, "worker threads");
  sweep->add_option("--output", s_out, "output path (default stdout)");

  // exhaustive
  auto* exhaustive = app.add_subcommand(
      "exhaustive", "Classify every base-point-free m-subset of the degree-d "
                    "monomials");
  int e_n = 0, e_d = 0, e_m = 0, e_workers = 1;
  long long e_guard = 1000000;
  std::string e_out;
  exhaustive->add_option("--n", e_n, "ambient dimension")->required();
  exhaustive->add_option("--d", e_d, "degree")->required();
  exhaustive->add_option("--m", e_m, "subset size")->required();
  exhaustive->add_option("--guard", e_guard, "maximum number of subsets");
  exhaustive->add_option("--workers", e_workers, "worker threads");
  exhaustive->add_option("--output", e_out, "output path (default stdout)");

  // decompose
  auto* decompose = app.add_subcommand(
      "decompose", "Test an exterior element for closedness and decomposability");
  std::string x_in, x_out;
  decompose->add_option("--input", x_in, "input path (default stdin)");
  decompose->add_option("--output", x_out, "output path (default stdout)");

  // secant
  auto* secant = app.add_subcommand(
      "secant", "Classify a 5-dimensional space of plane quadrics");
  std::string q_in, q_out;
  secant->add_option("--input", q_in, "input path (default stdin)");
  secant->add_option("--output", q_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) return run_bounds(b_n, b_d, b_c, b_out);
    if (check->parsed()) return run_check(c_in, c_out, c_mode, c_search, c_budget);
    if (construct->parsed()) return run_construct(k_n, k_d, k_m, k_require, k_out);
    if (sweep->parsed()) {
      return run_sweep(s_n, s_d, s_mmin, s_mmax, s_require, s_workers, s_out);
    }
    if (exhaustive->parsed()) {
      return run_exhaustive(e_n, e_d, e_m, e_guard, e_workers, e_out);
    }
    if (decompose->parsed()) return run_decompose(x_in, x_out);
    if (secant->parsed()) return run_secant(q_in, q_out);
  } catch (const syzstab::ImpossibleConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitImpossible;
  } catch (const syzstab::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

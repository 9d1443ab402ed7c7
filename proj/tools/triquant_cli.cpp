// Command-line front end: solve for optimal n-point quantizers on the unit
// triangle, verify the library's reference results, evaluate the lattice
// construction, and sweep n for figure-style output.
//
// Exit codes: 0 success, 1 check failure, 2 invalid arguments, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "triquant/report.hpp"
#include "triquant/triquant.hpp"

namespace tq = triquant;
using nlohmann::json;

namespace {

int thread_cap() {
  if (const char* env = std::getenv("TRIQUANT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // no cap
}

struct OutputOptions {
  std::string out_dir;
  std::string format = "json";  // json|csv|svg|all
  bool want(const std::string& f) const { return format == f || format == "all"; }
};

void emit_outputs(const OutputOptions& opts, const std::string& stem,
                  const json& report, const tq::Domain& domain,
                  const tq::Configuration* cfg) {
  if (opts.out_dir.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::filesystem::create_directories(opts.out_dir);
  const std::string base = opts.out_dir + "/" + stem;
  if (opts.want("json")) tq::write_file(base + ".json", report.dump(2) + "\n");
  if (cfg != nullptr) {
    if (opts.want("csv")) tq::write_file(base + ".csv", tq::points_csv(*cfg));
    if (opts.want("svg")) tq::write_file(base + ".svg", tq::render_svg(domain, *cfg));
  }
}

json schedule_json(const tq::SearchSchedule& s) {
  return {{"initial_amplitude", s.initial_amplitude},
          {"decay", s.decay},
          {"stall_threshold", s.stall_threshold},
          {"min_amplitude", s.min_amplitude},
          {"max_proposals", s.max_proposals},
          {"seed", s.rng_seed}};
}

// Optional key=value schedule file; CLI flags override its entries.
tq::SearchSchedule load_schedule(const std::string& path) {
  tq::SearchSchedule s;
  if (path.empty()) return s;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read schedule file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(" \t\r");
      const auto e = t.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "initial_amplitude") s.initial_amplitude = std::stod(val);
    else if (key == "decay") s.decay = std::stod(val);
    else if (key == "stall_threshold") s.stall_threshold = std::stoi(val);
    else if (key == "min_amplitude") s.min_amplitude = std::stod(val);
    else if (key == "max_proposals") s.max_proposals = std::stol(val);
    else if (key == "seed") s.rng_seed = std::stoull(val);
    else throw std::runtime_error("unknown schedule key: " + key);
  }
  return s;
}

json solve_one(const tq::Domain& domain, int n, int starts,
               const tq::SearchSchedule& schedule, tq::SearchResult* out_result) {
  const auto t0 = std::chrono::steady_clock::now();
  tq::SearchResult result = tq::multistart(domain, n, schedule, starts, thread_cap());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json res;
  res["n"] = n;
  res["error"] = result.error;
  res["residual"] = result.residual;
  res["n_times_error"] = n * result.error;
  res["points"] = tq::config_json(result.config);

  const auto axes = tq::all_symmetry_axes(result.config);
  res["symmetry_axes"] = axes.size();
  const auto rows = tq::row_decomposition(result.config);
  json row_counts = json::array();
  for (const auto& [level, count] : rows.rows) row_counts.push_back(count);
  res["rows"] = row_counts;
  res["rows_match_conjecture"] = rows.matches_conjecture;

  const int N = static_cast<int>(std::floor(std::sqrt(2.0 * n)));
  if (N >= 3 && N * (N + 1) / 2 == n) {
    res["lattice_bound"] = tq::bound(N);
    res["below_lattice_bound"] = result.error <= tq::bound(N);
  }
  res["seconds"] = seconds;
  if (out_result) *out_result = std::move(result);
  return res;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

json run_verify(int& exit_code) {
  const tq::Domain domain = tq::Domain::unit_triangle();
  std::vector<Check> checks;
  auto add = [&](const std::string& name, bool pass, double got, double want) {
    checks.push_back({name, pass,
                      "got " + tq::format_double(got) + ", want " +
                          tq::format_double(want)});
  };

  const auto [cfg1, v1] = tq::optimal_1(domain);
  add("V1 = 1/12", std::abs(v1 - 1.0 / 12.0) < 1e-12, v1, 1.0 / 12.0);

  const auto two = tq::optimal_2(domain);
  add("V2 = 0.0532767", std::abs(two[0].second - 0.0532767) < 1e-6,
      two[0].second, 0.0532767);
  const tq::Partition part2 = tq::partition(domain, two[0].first);
  const double ratio = std::max(tq::area(part2.cells[0]), tq::area(part2.cells[1])) /
                       std::min(tq::area(part2.cells[0]), tq::area(part2.cells[1]));
  const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
  add("2-means golden area ratio", std::abs(ratio - golden) < 1e-8, ratio, golden);

  const auto [cfg3, v3] = tq::optimal_3(domain);
  const tq::Partition part3 = tq::partition(domain, cfg3);
  add("V3 = 11/432", std::abs(part3.total_error - 11.0 / 432.0) < 1e-12,
      part3.total_error, 11.0 / 432.0);
  for (int i = 0; i < 3; ++i)
    add("3-means cell error " + std::to_string(i),
        std::abs(part3.cell_errors[i] - 11.0 / 1296.0) < 1e-12,
        part3.cell_errors[i], 11.0 / 1296.0);

  const auto [r41, r42] = tq::three_means_residuals(0.5, 2.0 / 3.0);
  add("Eq 4.1 residual at (1/2, 2/3)", std::abs(r41) < 1e-12, r41, 0.0);
  add("Eq 4.2 residual at (1/2, 2/3)", std::abs(r42) < 1e-12, r42, 0.0);

  const auto [cfg4, v4] = tq::optimal_4(domain, /*from_grid_scan=*/false);
  add("4-means p_y", std::abs(cfg4.points[0].y - 0.5436907490155839431) < 1e-10,
      cfg4.points[0].y, 0.5436907490155839431);
  add("V4 < V3", v4 < 11.0 / 432.0, v4, 11.0 / 432.0);

  for (int N = 3; N <= 6; ++N) {
    const auto params = tq::LatticeParams::with_optimal_margin(N);
    const double exact =
        tq::partition(domain, tq::build_lattice_config(params)).total_error;
    const double formula = tq::vn_of_lattice(params);
    add("lattice consistency N=" + std::to_string(N),
        std::abs(exact - formula) < 1e-10, exact, formula);
  }
  add("bound(3) equals lattice value at a_opt",
      std::abs(tq::bound(3) -
               tq::vn_of_lattice(tq::LatticeParams::with_optimal_margin(3))) < 1e-12,
      tq::bound(3), tq::vn_of_lattice(tq::LatticeParams::with_optimal_margin(3)));

  json out;
  out["checks"] = json::array();
  bool all = true;
  for (const Check& c : checks) {
    out["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) all = false;
  }
  out["all_pass"] = all;
  if (!all) exit_code = 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal n-point quantizers for the uniform distribution on "
               "the unit equilateral triangle"};
  app.require_subcommand(1);

  OutputOptions out_opts;
  int n = 1, starts = 5, lattice_n = 3, sweep_max = 21;
  std::uint64_t seed = 1;
  double a_override = -1.0, tol = 1e-10;
  std::string schedule_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_opts.out_dir, "output directory");
    cmd->add_option("--format", out_opts.format, "json|csv|svg|all")
        ->check(CLI::IsMember({"json", "csv", "svg", "all"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "multistart search for n points");
  solve->add_option("--n", n, "number of quantizer points")->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--starts", starts, "independent runs")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "base RNG seed");
  solve->add_option("--schedule", schedule_path, "key=value schedule file");
  solve->add_option("--tol", tol, "Lloyd polish tolerance");
  add_common(solve);

  CLI::App* verify = app.add_subcommand("verify", "run the reference checks");
  add_common(verify);

  CLI::App* lattice = app.add_subcommand("lattice", "lattice construction report");
  lattice->add_option("--N", lattice_n, "lattice rows")->required()
      ->check(CLI::Range(2, 1000));
  lattice->add_option("--a", a_override, "edge margin override");
  add_common(lattice);

  CLI::App* sweep = app.add_subcommand("sweep", "solve n = 1..n_max");
  sweep->add_option("--n-max", sweep_max, "largest n")->check(CLI::PositiveNumber);
  sweep->add_option("--starts", starts, "independent runs per n");
  sweep->add_option("--seed", seed, "base RNG seed");
  sweep->add_option("--schedule", schedule_path, "key=value schedule file");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const tq::Domain domain = tq::Domain::unit_triangle();
    int exit_code = 0;

    json report;
    report["version"] = tq::kVersion;

    if (solve->parsed()) {
      tq::SearchSchedule schedule = load_schedule(schedule_path);
      if (solve->count("--seed")) schedule.rng_seed = seed;
      else if (schedule_path.empty()) schedule.rng_seed = seed;
      report["command"] = "solve";
      report["schedule"] = schedule_json(schedule);
      report["starts"] = starts;
      tq::SearchResult result;
      report["result"] = solve_one(domain, n, starts, schedule, &result);
      emit_outputs(out_opts, "solve_n" + std::to_string(n), report, domain,
                   &result.config);
    } else if (verify->parsed()) {
      report["command"] = "verify";
      report["result"] = run_verify(exit_code);
      emit_outputs(out_opts, "verify", report, domain, nullptr);
      if (exit_code != 0) {
        for (const auto& c : report["result"]["checks"])
          if (!c["pass"].get<bool>())
            std::cerr << "FAILED: " << c["name"].get<std::string>() << " ("
                      << c["detail"].get<std::string>() << ")\n";
      }
    } else if (lattice->parsed()) {
      report["command"] = "lattice";
      const double margin = a_override > 0
                                ? a_override
                                : tq::LatticeParams::optimal_margin(lattice_n);
      const tq::LatticeParams params(lattice_n, 1.0, margin);
      tq::Configuration cfg = tq::build_lattice_config(params);
      json res;
      res["N"] = lattice_n;
      res["n"] = params.point_count();
      res["a"] = params.a;
      res["a_opt"] = tq::LatticeParams::optimal_margin(lattice_n);
      res["d"] = params.d;
      res["formula_error"] = tq::vn_of_lattice(params);
      res["exact_error"] = tq::partition(domain, cfg).total_error;
      if (lattice_n >= 3) res["bound"] = tq::bound(lattice_n);
      res["n_times_error"] = params.point_count() * tq::vn_of_lattice(params);
      res["asymptotic_n_times_error"] = 5.0 / 72.0;
      // 1-D scan over the margin to locate the true minimum of the formula.
      double best_a = params.a, best_v = tq::vn_of_lattice(params);
      const double amax = 1.0 / (2.0 * std::sqrt(3.0));
      for (int i = 1; i < 4000; ++i) {
        const double cand = amax * i / 4000.0;
        const tq::LatticeParams trial(lattice_n, 1.0, cand);
        if (!(trial.d > 0)) break;
        const double v = tq::vn_of_lattice(trial);
        if (v < best_v) { best_v = v; best_a = cand; }
      }
      res["a_scan_min"] = {{"a", best_a}, {"value", best_v}};
      report["result"] = res;
      emit_outputs(out_opts, "lattice_N" + std::to_string(lattice_n), report,
                   domain, &cfg);
    } else if (sweep->parsed()) {
      tq::SearchSchedule schedule = load_schedule(schedule_path);
      if (sweep->count("--seed") || schedule_path.empty()) schedule.rng_seed = seed;
      report["command"] = "sweep";
      report["schedule"] = schedule_json(schedule);
      report["starts"] = starts;
      json per_n = json::array();
      std::string csv = "n,error,n_times_error,symmetry_axes,rows_match\n";
      for (int k = 1; k <= sweep_max; ++k) {
        tq::SearchResult result;
        json row = solve_one(domain, k, starts, schedule, &result);
        csv += std::to_string(k) + "," + tq::format_double(result.error) + "," +
               tq::format_double(k * result.error) + "," +
               row["symmetry_axes"].dump() + "," +
               row["rows_match_conjecture"].dump() + "\n";
        per_n.push_back(std::move(row));
        if (!out_opts.out_dir.empty() && out_opts.want("svg")) {
          std::filesystem::create_directories(out_opts.out_dir);
          tq::write_file(out_opts.out_dir + "/sweep_n" + std::to_string(k) + ".svg",
                         tq::render_svg(domain, result.config));
        }
      }
      report["result"] = per_n;
      if (!out_opts.out_dir.empty()) {
        std::filesystem::create_directories(out_opts.out_dir);
        if (out_opts.want("csv"))
          tq::write_file(out_opts.out_dir + "/sweep.csv", csv);
        if (out_opts.want("json"))
          tq::write_file(out_opts.out_dir + "/sweep.json", report.dump(2) + "\n");
      } else {
        std::cout << report.dump(2) << "\n";
      }
    }
    return exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    if (msg.find("cannot") == 0 || msg.find("write failed") == 0) {
      std::cerr << "I/O error: " << msg << "\n";
      return 3;
    }
    std::cerr << "error: " << msg << "\n";
    return 1;
  }
}

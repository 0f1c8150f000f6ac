// Command line front end: problem selection, grid sweeps, table/CSV emission,
// and verification commands.
//
// Exit codes: 0 success, 1 failed check, 2 configuration error, 3 solver failure.
#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fvfpe/fvfpe.hpp"

using namespace fvfpe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct RunConfig {
  std::string problem = "example41";
  double alpha = 0.5;
  double k_alpha_override = -1.0;  // <= 0 keeps the catalog value
  std::optional<double> c0, c1, c2;
  Index n = 9;
  Index l = 100;
  std::vector<Index> n_list, l_list;
  std::string out;
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  bool final_only = false;
  bool inject_positive_offdiag = false;
  std::string config_path;
};

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Index(std::stoll(item)));
  return out;
}

// Flat key=value file; '#' starts a comment. Command-line flags win over file values.
void apply_config_file(const CLI::App* cmd, RunConfig& cfg) {
  std::ifstream in(cfg.config_path);
  if (!in) throw std::invalid_argument("cannot read config file: " + cfg.config_path);
  std::string line;
  auto trim = [](std::string s) {
    const auto from = s.find_first_not_of(" \t\r");
    const auto to = s.find_last_not_of(" \t\r");
    return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
  };
  auto flag_given = [&](const std::string& flag) {
    const auto* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (flag_given("--" + key)) continue;
    if (key == "problem") cfg.problem = value;
    else if (key == "alpha") cfg.alpha = std::stod(value);
    else if (key == "k-alpha") cfg.k_alpha_override = std::stod(value);
    else if (key == "drift-c0") cfg.c0 = std::stod(value);
    else if (key == "drift-c1") cfg.c1 = std::stod(value);
    else if (key == "drift-c2") cfg.c2 = std::stod(value);
    else if (key == "n") cfg.n = Index(std::stoll(value));
    else if (key == "l") cfg.l = Index(std::stoll(value));
    else if (key == "n-list") cfg.n_list = parse_index_list(value);
    else if (key == "l-list") cfg.l_list = parse_index_list(value);
    else if (key == "out") cfg.out = value;
    else if (key == "workers") cfg.workers = unsigned(std::stoul(value));
    else if (key == "final-only") cfg.final_only = (value == "true" || value == "1");
    else throw std::invalid_argument("unknown config key: " + key);
  }
}

std::string fmt_cell(double v) {  // table cells: 4 significant digits, scientific
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string fmt_rate(double v) {  // rates read like plain decimals
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string fmt_full(double v) {  // raw dumps keep full precision
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CatalogProblem<double> configured_problem(const RunConfig& cfg) {
  auto p = make_problem<double>(cfg.problem, cfg.alpha);
  if (cfg.k_alpha_override > 0.0) {
    p.spec.k_alpha = cfg.k_alpha_override;
    p.exact = nullptr;  // catalog solutions assume the catalog coefficient
  }
  if (cfg.c0 || cfg.c1 || cfg.c2) {
    const double c0 = cfg.c0.value_or(0.0), c1 = cfg.c1.value_or(0.0), c2 = cfg.c2.value_or(0.0);
    p.spec.drift = [=](double x) { return c0 + c1 * x + c2 * x * x; };
    p.exact = nullptr;  // custom drift invalidates the manufactured solution
  }
  return p;
}

// Output goes to --out when given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void validate_sweep(const std::vector<Index>& list) {
  if (list.size() < 2) throw CLI::ValidationError("sweep list needs at least two sizes");
  for (size_t i = 0; i < list.size(); ++i) {
    if (list[i] < 1) throw CLI::ValidationError("sweep sizes must be positive");
    if (i > 0 && list[i] <= list[i - 1])
      throw CLI::ValidationError("sweep list must be strictly increasing");
  }
}

// Runs one closure per sweep cell on up to cfg.workers threads; results land
// in submission order, so the emitted table is deterministic.
template <typename Fn>
std::vector<ErrorSummary<double>> run_cells(const RunConfig& cfg, size_t count, Fn&& cell) {
  std::vector<ErrorSummary<double>> results(count);
  std::atomic<size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, unsigned(count)));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t j = next.fetch_add(1); j < count; j = next.fetch_add(1)) results[j] = cell(j);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

int cmd_solve(const RunConfig& cfg) {
  const auto p = configured_problem(cfg);
  const auto grid = build_grid(p.spec, cfg.n, cfg.l);
  const auto field = run(p.spec, grid);
  Sink sink(cfg.out);
  auto& os = sink.stream();
  if (cfg.final_only) {
    os << "x,w\n";
    for (Index i = 0; i < grid.n_interior + 2; ++i)
      os << fmt_full(grid.nodes[i]) << ',' << fmt_full(field.values(grid.n_steps, i)) << '\n';
  } else {
    os << "n,t,x,w\n";
    for (Index n = 0; n <= grid.n_steps; ++n)
      for (Index i = 0; i < grid.n_interior + 2; ++i)
        os << n << ',' << fmt_full(grid.times[n]) << ',' << fmt_full(grid.nodes[i]) << ','
           << fmt_full(field.values(n, i)) << '\n';
  }
  return kExitOk;
}

int cmd_convergence(const RunConfig& cfg, bool in_space) {
  const auto& sizes = in_space ? cfg.n_list : cfg.l_list;
  validate_sweep(sizes);
  const auto base = configured_problem(cfg);
  if (!base.exact)
    throw CLI::ValidationError("convergence study needs a problem with an exact solution");

  const auto results = run_cells(cfg, sizes.size(), [&](size_t j) {
    const Index n = in_space ? sizes[j] : cfg.n;
    const Index l = in_space ? cfg.l : sizes[j];
    const auto grid = build_grid(base.spec, n, l);
    return error_summary(run(base.spec, grid), base.exact);
  });

  Sink sink(cfg.out);
  auto& os = sink.stream();
  os << (in_space ? "quantity_vs_Np1" : "quantity_vs_L");
  for (const Index s : sizes) os << ',' << (in_space ? s + 1 : s);
  os << '\n';
  os << "max_inf";
  for (const auto& r : results) os << ',' << fmt_cell(r.max_inf);
  os << '\n';
  os << "max_l1";
  for (const auto& r : results) os << ',' << fmt_cell(r.max_l1);
  os << '\n';
  os << "rate_l1,";
  for (size_t j = 1; j < results.size(); ++j) {
    const double sc = double(in_space ? sizes[j - 1] + 1 : sizes[j - 1]);
    const double sf = double(in_space ? sizes[j] + 1 : sizes[j]);
    os << ',' << fmt_rate(convergence_rate(results[j - 1].max_l1, results[j].max_l1, sc, sf));
  }
  os << '\n';
  return kExitOk;
}

int cmd_compare_fd(const RunConfig& cfg) {
  const auto p = configured_problem(cfg);
  const auto grid = build_grid(p.spec, cfg.n, cfg.l);
  const auto fv = run(p.spec, grid);
  const auto fd = run_fd(p.spec, grid);
  Sink sink(cfg.out);
  auto& os = sink.stream();
  os << (p.exact ? "x,fv,fd,exact\n" : "x,fv,fd\n");
  for (Index i = 0; i < grid.n_interior + 2; ++i) {
    os << fmt_full(grid.nodes[i]) << ',' << fmt_full(fv.values(grid.n_steps, i)) << ','
       << fmt_full(fd.values(grid.n_steps, i));
    if (p.exact) os << ',' << fmt_full(p.exact(grid.nodes[i], grid.T));
    os << '\n';
  }
  std::cout << "fv_min=" << fmt_full(fv.values.minCoeff()) << '\n'
            << "fd_min=" << fmt_full(fd.values.minCoeff()) << '\n'
            << "fv_oscillation_count=" << oscillation_count(fv.profile(grid.n_steps)) << '\n'
            << "fd_oscillation_count=" << oscillation_count(fd.profile(grid.n_steps)) << '\n';
  return kExitOk;
}

int cmd_check_mmatrix(const RunConfig& cfg) {
  const auto p = configured_problem(cfg);
  const auto grid = build_grid(p.spec, cfg.n, cfg.l);
  const auto split = split_drift(p.spec.drift, p.spec.k_alpha, grid);
  auto sys = system_matrix(caputo_scale(grid.h, grid.dt, p.spec.alpha),
                           assemble_diffusion(p.spec.k_alpha, grid.h, grid.n_interior),
                           assemble_drift(split, grid.n_interior));
  if (cfg.inject_positive_offdiag && sys.order() > 1) sys.upper[0] = 1.0;  // test hook
  const auto report = verify_m_matrix(sys);
  std::cout << "is_m_matrix=" << (report.is_m_matrix ? "true" : "false") << '\n'
            << "min_column_slack=" << fmt_full(report.min_column_slack) << '\n';
  if (!report.offending_indices.empty()) {
    std::cout << "offending_columns=";
    for (size_t j = 0; j < report.offending_indices.size(); ++j)
      std::cout << (j ? "," : "") << report.offending_indices[j];
    std::cout << '\n';
  }
  return report.is_m_matrix ? kExitOk : kExitCheckFailed;
}

int cmd_oracle_check(const RunConfig& cfg) {
  const auto p = configured_problem(cfg);
  const auto grid = build_grid(p.spec, cfg.n, cfg.l);
  const auto fast = run(p.spec, grid);
  const auto slow = dense_oracle_run(p.spec, grid);
  const double scale = std::max(1e-30, slow.values.cwiseAbs().maxCoeff());
  const double rel = (fast.values - slow.values).cwiseAbs().maxCoeff() / scale;
  const auto residual = residual_check(fast, p.spec, grid);
  std::cout << "max_rel_diff=" << fmt_full(rel) << '\n'
            << "max_scaled_residual=" << fmt_full(residual.max_scaled) << '\n';
  return (rel <= 1e-10 && residual.max_scaled <= 1e-10) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone finite volume solver for time-fractional advection-diffusion"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", cfg.config_path, "flat key=value file; flags override it");
    cmd->add_option("--problem", cfg.problem, "catalog problem name");
    cmd->add_option("--alpha", cfg.alpha, "fractional order in (0,1)");
    cmd->add_option("--k-alpha", cfg.k_alpha_override, "diffusion coefficient override");
    cmd->add_option("--drift-c0", cfg.c0, "custom drift constant term");
    cmd->add_option("--drift-c1", cfg.c1, "custom drift linear coefficient");
    cmd->add_option("--drift-c2", cfg.c2, "custom drift quadratic coefficient");
    cmd->add_option("--n", cfg.n, "interior node count N");
    cmd->add_option("--l", cfg.l, "time step count L");
    cmd->add_option("--out", cfg.out, "output CSV path (default: stdout)");
    cmd->add_option("--workers", cfg.workers, "max concurrent sweep cells");
  };

  auto* solve = app.add_subcommand("solve", "run the scheme and dump the field as CSV");
  add_common(solve);
  solve->add_flag("--final-only", cfg.final_only, "emit only the final-time profile");

  auto* conv_space = app.add_subcommand("convergence-space", "error table over a spatial sweep");
  add_common(conv_space);
  conv_space->add_option("--n-list", cfg.n_list, "strictly increasing interior node counts")
      ->delimiter(',');

  auto* conv_time = app.add_subcommand("convergence-time", "error table over a temporal sweep");
  add_common(conv_time);
  conv_time->add_option("--l-list", cfg.l_list, "strictly increasing time step counts")
      ->delimiter(',');

  auto* compare = app.add_subcommand("compare-fd", "final-time profiles of the fv and fd schemes");
  add_common(compare);

  auto* mmatrix = app.add_subcommand("check-mmatrix", "verify the system matrix structure");
  add_common(mmatrix);
  mmatrix->add_flag("--inject-positive-offdiag", cfg.inject_positive_offdiag)->group("");

  auto* oracle = app.add_subcommand("oracle-check", "band solver vs dense elimination cross-check");
  add_common(oracle);

  try {
    app.parse(argc, argv);
    const CLI::App* active = app.get_subcommands().empty() ? nullptr : app.get_subcommands()[0];
    if (active != nullptr && !cfg.config_path.empty()) apply_config_file(active, cfg);
    if (solve->parsed()) return cmd_solve(cfg);
    if (conv_space->parsed()) return cmd_convergence(cfg, true);
    if (conv_time->parsed()) return cmd_convergence(cfg, false);
    if (compare->parsed()) return cmd_compare_fd(cfg);
    if (mmatrix->parsed()) return cmd_check_mmatrix(cfg);
    if (oracle->parsed()) return cmd_oracle_check(cfg);
    std::cerr << app.help();
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const solver_error& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

#include "pslet/errors.hpp"
#include "pslet/runner.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

using namespace pslet;
using namespace pslet::runner;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string config;
  std::string out;
  std::string format;
  std::string pade;
  int order{0};
  std::string mode;
  bool permissive{false};
};

struct Inline {
  std::string potential;
  std::vector<int> k;
  std::vector<double> ell;
  std::vector<double> alpha;
  int dim{0};
  int q{0};
  double alpha_o{0.0};
};

void add_common(CLI::App *app, Common &c) {
  app->add_option("--config", c.config, "JSON run configuration");
  app->add_option("--out", c.out, "output directory");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--pade", c.pade, "Pade degrees L,M");
  app->add_option("--order", c.order, "truncation order N_max");
  app->add_option("--mode", c.mode, "beta mode")->check(CLI::IsMember({"zero", "plus", "minus"}));
  app->add_flag("--permissive", c.permissive, "exit 0 even when rows fail");
}

void add_inline(CLI::App *app, Inline &s) {
  app->add_option("--potential", s.potential, "ddt(a), coulomb(A), harmonic, or ddt with --alpha");
  app->add_option("-k", s.k, "excitation number(s)");
  app->add_option("--ell", s.ell, "angular momentum value(s)");
  app->add_option("--alpha", s.alpha, "DDT coupling value(s)");
  app->add_option("--dim", s.dim, "dimension d");
  app->add_option("--q", s.q, "quasi-parity (+1/-1), replaces --ell");
  app->add_option("--alpha-o", s.alpha_o, "|alpha_o| for the quasi-parity");
}

RunConfig build_config(const Common &c, const Inline &s) {
  RunConfig cfg = c.config.empty() ? RunConfig{} : load_config(c.config);
  if (!s.potential.empty())
    cfg.potential = s.potential;
  if (!s.k.empty())
    cfg.k = s.k;
  if (!s.ell.empty())
    cfg.ell = s.ell;
  if (!s.alpha.empty()) {
    cfg.alpha = s.alpha;
    cfg.potential = "ddt";
  }
  if (s.dim)
    cfg.dim = s.dim;
  if (s.q)
    cfg.quasi_parity = QuasiParityRange{{s.q}, {s.alpha_o}};
  if (!c.out.empty())
    cfg.out_dir = c.out;
  if (!c.format.empty())
    cfg.format = c.format;
  if (c.order)
    cfg.n_max = c.order;
  if (!c.mode.empty())
    cfg.mode = beta_mode_from_string(c.mode);
  if (!c.pade.empty()) {
    const auto comma = c.pade.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--pade expects L,M");
    cfg.pade_L = std::stoi(c.pade.substr(0, comma));
    cfg.pade_M = std::stoi(c.pade.substr(comma + 1));
  }
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const std::string &dir, const std::string &name) {
  fs::create_directories(dir);
  std::ofstream f(fs::path(dir) / name);
  if (!f)
    throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
  return f;
}

void emit_rows(const RunConfig &cfg, const std::vector<ResultRow> &rows, const std::string &stem,
               bool to_stdout) {
  const std::string name = stem + (cfg.format == "json" ? ".json" : ".csv");
  auto f = open_out(cfg.out_dir, name);
  auto write = [&](std::ostream &os) {
    if (cfg.format == "json")
      write_rows_json(os, rows);
    else
      write_rows_csv(os, rows);
  };
  write(f);
  if (to_stdout)
    write(std::cout);
}

int exit_for(const std::vector<ResultRow> &rows, bool permissive) {
  const bool bad = std::any_of(rows.begin(), rows.end(), [](const ResultRow &r) { return r.status != "ok"; });
  return bad && !permissive ? 1 : 0;
}

int cmd_solve(const Common &c, const Inline &s) {
  const auto cfg = build_config(c, s);
  const auto jobs = expand_jobs(cfg);
  if (jobs.size() != 1)
    throw std::invalid_argument("solve expects a single state, got " + std::to_string(jobs.size()));
  const auto res = solve_job(jobs.front(), options_from(cfg));
  emit_rows(cfg, {res.row}, "result", true);
  if (res.series) {
    auto f = open_out(cfg.out_dir, "series.csv");
    write_series_csv(f, *res.series);
  }
  if (!res.row.message.empty())
    std::cerr << res.row.status << ": " << res.row.message << '\n';
  return exit_for({res.row}, c.permissive);
}

int cmd_sweep(const Common &c, const Inline &s) {
  const auto cfg = build_config(c, s);
  const auto out = run_jobs(expand_jobs(cfg), options_from(cfg));
  std::vector<ResultRow> rows;
  std::map<std::string, int> counts;
  for (const auto &o : out) {
    rows.push_back(o.row);
    ++counts[o.row.status];
  }
  emit_rows(cfg, rows, "sweep", false);
  std::cerr << rows.size() << " rows:";
  for (const auto &[status, n] : counts)
    std::cerr << ' ' << status << '=' << n;
  std::cerr << '\n';
  return exit_for(rows, c.permissive);
}

int cmd_oracle(const Common &c, const Inline &s) {
  auto cfg = build_config(c, s);
  cfg.oracle = true;
  const auto out = run_jobs(expand_jobs(cfg), options_from(cfg));
  auto f = open_out(cfg.out_dir, "oracle.csv");
  f << "k_guess,shift_re,shift_im,E_re,E_im,iterations,residual\n";
  std::vector<ResultRow> rows;
  for (const auto &o : out) {
    rows.push_back(o.row);
    if (!o.oracle) {
      std::cerr << o.row.potential << " k=" << o.row.k << ": " << o.row.status << ' ' << o.row.message << '\n';
      continue;
    }
    const cplx shift{o.row.pade_value, 0.0};
    f << o.row.k << ',' << format_number(shift.real()) << ',' << format_number(shift.imag()) << ','
      << format_number(o.oracle->value.real()) << ',' << format_number(o.oracle->value.imag()) << ','
      << o.oracle->iterations << ',' << format_number(o.oracle->residual) << '\n';
  }
  return exit_for(rows, c.permissive);
}

int cmd_reproduce(const Common &c, const std::string &id, const std::string &golden_path) {
  const auto golden = load_golden(golden_path);
  const auto rep = reproduce(id, golden);
  const std::string dir = c.out.empty() ? "." : c.out;
  auto f = open_out(dir, "table_" + id + ".csv");
  write_reproduction_csv(f, rep);

  int checked = 0, passed = 0;
  for (const auto &cell : rep.cells) {
    if (!cell.checked)
      continue;
    ++checked;
    passed += cell.pass;
    if (!cell.pass)
      std::cerr << "  miss " << cell.row << ' ' << cell.column << ": printed " << cell.printed << ", got "
                << format_number(cell.computed) << (cell.note.empty() ? "" : " (" + cell.note + ")") << '\n';
  }
  for (const auto &st : rep.statuses)
    std::cerr << "  status " << st << '\n';
  for (const auto &p : rep.problems)
    std::cerr << "  problem " << p << '\n';
  std::cerr << id << ": " << passed << '/' << checked << " cells within tolerance\n";
  return rep.ok() || c.permissive ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Shifted-l expansion energies for PT-symmetric radial problems"};
  app.require_subcommand(1);

  Common common;
  Inline state;
  std::string table_id;
  std::string golden = default_golden_path();

  auto *solve = app.add_subcommand("solve", "solve one state");
  auto *sweep = app.add_subcommand("sweep", "solve a cartesian product of states");
  auto *oracle = app.add_subcommand("oracle", "contour finite-difference eigenvalues");
  auto *repro = app.add_subcommand("reproduce", "regenerate a published table or figure");
  for (auto *sub : {solve, sweep, oracle}) {
    add_common(sub, common);
    add_inline(sub, state);
  }
  add_common(repro, common);
  repro->add_option("table", table_id, "I, II, III, IV, fig1 or fig2")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "IV", "fig1", "fig2"}));
  repro->add_option("--data", golden, "golden table file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve)
      return cmd_solve(common, state);
    if (*sweep)
      return cmd_sweep(common, state);
    if (*oracle)
      return cmd_oracle(common, state);
    return cmd_reproduce(common, table_id, golden);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

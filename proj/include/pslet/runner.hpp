#pragma once

#include "pslet/oracle.hpp"
#include "pslet/pade.hpp"

#include <json.hpp>

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pslet::runner {

struct GridOverride {
  std::optional<double> c;
  std::optional<double> L;
  std::optional<int> N;
};

struct QuasiParityRange {
  std::vector<int> q;
  std::vector<double> alpha_o;
};

struct RunConfig {
  std::string potential{"ddt(0)"};
  std::optional<Potential> custom; // from a list of {re, im, p_num, p_den} terms
  std::vector<double> alpha; // expands a bare "ddt" into ddt(α) per entry
  std::vector<int> k{0};
  std::vector<double> ell{0.0};
  int dim{3};
  std::optional<QuasiParityRange> quasi_parity;
  BetaMode mode{BetaMode::minus};
  int n_max{10};
  int pade_L{5};
  int pade_M{5};
  bool oracle{false};
  GridOverride grid;
  std::string out_dir{"."};
  std::string format{"csv"};

  void validate() const;
};

RunConfig parse_config(const nlohmann::json &j);
RunConfig load_config(const std::string &path);

// Status values: ok, flown_away, no_minimum, diverged, oracle_failed.
struct ResultRow {
  std::string potential;
  std::optional<double> alpha;
  int k{0};
  double ell{0.0};
  int dim{3};
  std::optional<int> q;
  std::optional<double> alpha_o;
  std::string mode;
  double leading_term{NAN};
  double ten_term_sum{NAN};
  double pade_value{NAN};
  std::optional<double> oracle_value;
  double lbar{NAN};
  double im_residual{NAN};
  std::string status{"ok"};
  std::string message;
};

// One unit of work: a concrete potential plus quantum numbers.
struct Job {
  std::string potential;
  std::optional<double> alpha;
  StateSpec state;
  Potential pot;
};

struct SolveOptions {
  BetaMode mode{BetaMode::minus};
  int n_max{10};
  int pade_L{5};
  int pade_M{5};
  bool oracle{false};
  GridOverride grid;
};

SolveOptions options_from(const RunConfig &cfg);

struct SolveOutcome {
  ResultRow row;
  std::optional<LeadingOrder> lead;
  std::optional<EnergySeries> series;
  std::optional<OracleEstimate> oracle;
};

// self_consistent -> build_expansions -> solve_hierarchy -> assemble -> pade,
// optionally the contour oracle seeded with the Padé value.
SolveOutcome solve_job(const Job &job, const SolveOptions &opt);

// Maps a pipeline exception to a row status.
std::string status_of(std::exception_ptr e);

// Cartesian product in (α, ℓ or (q, |α_o|), k) order.
std::vector<Job> expand_jobs(const RunConfig &cfg);

// Solves every job on a worker pool; rows come back in job order.
std::vector<SolveOutcome> run_jobs(const std::vector<Job> &jobs, const SolveOptions &opt,
                                   unsigned threads = 0);

std::string format_number(double x);

void write_rows_csv(std::ostream &os, const std::vector<ResultRow> &rows);
void write_rows_json(std::ostream &os, const std::vector<ResultRow> &rows);
// n, Re E^(n), Im E^(n), partial_sum, pade_diag
void write_series_csv(std::ostream &os, const EnergySeries &series);

// Published-table comparison, one entry per checked cell.
struct CellCheck {
  std::string table;
  std::string row;
  std::string column;
  std::string printed;
  double expected{NAN};
  double computed{NAN};
  double abs_diff{NAN};
  double tolerance{NAN};
  bool relative{false};
  bool checked{true};
  bool pass{false};
  std::string note;
};

struct Reproduction {
  std::string id;
  std::vector<CellCheck> cells;
  std::vector<std::string> header; // figure data, one string per cell
  std::vector<std::vector<std::string>> data;
  std::vector<std::string> problems; // ok rows with |Im E| > 1e-6
  std::vector<std::string> statuses; // rows whose pipeline did not finish
  bool ok() const;
};

nlohmann::json load_golden(const std::string &path);
// Default location of the bundled golden tables.
std::string default_golden_path();

// id ∈ {I, II, III, IV, fig1, fig2}.
Reproduction reproduce(const std::string &id, const nlohmann::json &golden);

void write_reproduction_csv(std::ostream &os, const Reproduction &rep);

// Significant digits in a printed decimal such as "-211.13554785".
int significant_digits(const std::string &printed);

} // namespace pslet::runner

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tecu/problem.hpp"
#include "tecu/updates.hpp"

namespace tecu {

struct DiagnosticsConfig {
  bool phi_monitoring = true;
  double descent_slack = 1e-8;
  /// Snapshot every iterate (and raw embedded candidates) into the result.
  bool keep_iterates = false;
};

struct SolverConfig {
  UpdateRule rule_x;
  UpdateRule rule_y;
  int max_outer = 500;
  double stop_tol = 1e-4;
  DiagnosticsConfig diagnostics;
  unsigned seed = 0;
};

enum class SolveStatus { Converged, MaxIterations };

struct SolveResult {
  Matrix final_x, final_y;
  std::vector<TraceRecord> trace;
  SolveStatus status = SolveStatus::MaxIterations;
  /// "1-6", "2-6", "3-4", "3-5", "3-6" for embedded-bearing configurations,
  /// the baseline name (e.g. "PALM") for all-classical ones.
  std::string combination_label;

  // Populated when diagnostics.keep_iterates is on. Index 0 holds the
  // initial point; raw candidates are empty where no accepted embedded
  // update produced one.
  std::vector<Matrix> iterates_x, iterates_y;
  std::vector<Matrix> raw_candidate_x, raw_candidate_y;
};

/// Numeric combination code of a rule pair, "<1|2|3>-<4|5|6>"
/// (proximal / prox-linear / embedded per block).
std::string combination_code(const UpdateRule& rule_x, const UpdateRule& rule_y);

/// Display label: embedded-bearing codes stay numeric, known all-classical
/// codes map to their conventional solver name ("2-5" -> "PALM",
/// "1-4" -> "PAM").
std::string combination_label(const UpdateRule& rule_x, const UpdateRule& rule_y);

/// Cyclic two-block outer loop: x-update with y frozen, then y-update with
/// the fresh x, eps bookkeeping, stopping test and trace emission. Throws
/// std::invalid_argument when the initial point is infeasible and
/// std::logic_error if an accepted iterate ever evaluates to +inf.
SolveResult solve(const BlockProblem& problem, const SolverConfig& config, const Matrix& init_x,
                  const Matrix& init_y);

/// True iff max of the three relative changes (x step, y step, objective)
/// falls below tol. Denominators are guarded at 1e-12.
bool stopping_check(const IterateState& state, double psi_t, double psi_prev, double tol);

/// Lyapunov value Phi(z^t, z^{t-1}) for the given update combination:
/// Psi plus the displacement correction terms carried by that combination
/// ("3-6" both blocks, "1-6"/"2-6" y only, "3-4"/"3-5" x only).
double lyapunov_phi(double psi, const IterateState& state, const std::string& combination,
                    double c_x, double c_y, double eta_1, double eta_2);

struct DescentParams {
  double eta_1 = 0, eta_2 = 0;
  double c_x = 0, c_y = 0;
  std::vector<double> zeta_x, zeta_y;          // per-iteration proximal weights
  std::vector<double> gamma_gap_x, gamma_gap_y;  // per-iteration gamma - L
};

/// Combination-dependent sufficient-descent constant a > 0. Iteration-
/// dependent weights enter through the per-iteration lists (their minimum is
/// taken). Throws std::invalid_argument when the parameters leave a <= 0 or
/// the combination is unknown.
double descent_margin_a(const std::string& combination, const DescentParams& params);

/// Iterations t >= 2 whose Lyapunov decrease falls short of
/// a * ||z^{t+1} - z^t||^2 - descent_slack * (1 + |Phi_t|). Requires at least
/// three records.
std::vector<int> check_sufficient_descent(const std::vector<TraceRecord>& trace, double a,
                                          double descent_slack);

/// Outcome of one block update inside the outer loop.
struct BlockUpdateOutcome {
  Matrix value;
  double err_norm = 0;
  int inner_steps = 1;
  bool fallback = false;
  /// Sufficient-descent coefficient contributed by this update.
  double margin = 0;
  double gamma_gap = std::numeric_limits<double>::quiet_NaN();
  Matrix raw_candidate;
};

using BlockUpdater = std::function<BlockUpdateOutcome(
    const BlockProblem&, Block, const IterateState& pre, const Matrix& frozen, double eps)>;

struct LoopConfig {
  int max_outer = 500;
  double stop_tol = 1e-4;
  DiagnosticsConfig diagnostics;
  /// Combination code used for Phi; empty means Phi = Psi.
  std::string phi_combination;
  double c_x = 0, c_y = 0, eta_1 = 0, eta_2 = 0;
};

/// Shared outer loop behind both solve() and the baseline drivers; all
/// solvers log traces with the identical schema through this path.
SolveResult solve_with_updaters(const BlockProblem& problem, const BlockUpdater& update_x,
                                const BlockUpdater& update_y, const LoopConfig& loop,
                                const Matrix& init_x, const Matrix& init_y,
                                const std::string& label);

}  // namespace tecu

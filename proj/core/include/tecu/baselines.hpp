#pragma once

#include <utility>

#include "tecu/engine.hpp"
#include "tecu/problem.hpp"

namespace tecu {

struct InertialConfig {
  double beta = 0.3;  // extrapolation weight in [0, 1)
};

/// One PALM iteration: prox-linear step on x, then on y (combination "2-5").
std::pair<Matrix, Matrix> palm_iterate(const BlockProblem& problem, const IterateState& state,
                                       double safety = 1.5);

/// One iPALM iteration: each block is extrapolated by beta * (u^t - u^{t-1})
/// and the prox-linear step is taken at the extrapolated point.
std::pair<Matrix, Matrix> ipalm_iterate(const BlockProblem& problem, const IterateState& state,
                                        const InertialConfig& inertial, double safety = 1.5);

/// One BCU iteration: the gradient is evaluated at the extrapolated point but
/// the prox stays anchored at the non-extrapolated iterate.
std::pair<Matrix, Matrix> bcu_iterate(const BlockProblem& problem, const IterateState& state,
                                      const InertialConfig& inertial, double safety = 1.5);

/// Heuristic dictionary update: solves the unconstrained proximal subproblem
/// D = (Y W + eta D_cur)(W^T W + eta I)^{-1} and projects columns onto the
/// unit sphere afterwards. No error guarantee.
Matrix inv_d_update(const Matrix& d_cur, const Matrix& w, const Matrix& data_y, double eta);

struct BaselineOptions {
  double safety = 1.5;
  double beta = 0.3;      // ipalm/bcu extrapolation
  double inv_eta = 1.0;   // proximal weight of the INV solve, 0 for pure least squares
  int max_outer = 500;
  double stop_tol = 1e-4;
  DiagnosticsConfig diagnostics;
};

/// Full-run drivers sharing the engine loop (identical trace schema).
SolveResult run_palm(const BlockProblem& problem, const BaselineOptions& opts,
                     const Matrix& init_x, const Matrix& init_y);
SolveResult run_ipalm(const BlockProblem& problem, const BaselineOptions& opts,
                      const Matrix& init_x, const Matrix& init_y);
SolveResult run_bcu(const BlockProblem& problem, const BaselineOptions& opts, const Matrix& init_x,
                    const Matrix& init_y);

/// INV run for dictionary-learning shaped problems: prox-linear on the code
/// block, inv_d_update on the dictionary block. The logged err_norm_y reports
/// the true first-order residual of the INV iterate, which the update makes
/// no attempt to control.
SolveResult run_inv(const BlockProblem& problem, const Matrix& data_y, const BaselineOptions& opts,
                    const Matrix& init_x, const Matrix& init_y);

}  // namespace tecu

#pragma once

#include <memory>
#include <variant>

#include "tecu/problem.hpp"

namespace tecu {

/// One propagation step A_u^i of a task-embedded update. Implementations may
/// carry per-subproblem state (e.g. ADMM multipliers); reset() is called once
/// at the start of every outer iteration and step() must be deterministic
/// given its inputs and that state.
class EmbeddedOperator {
 public:
  virtual ~EmbeddedOperator() = default;

  virtual void reset(const Matrix& /*start*/, const Matrix& /*frozen*/, double /*eta*/) {}

  /// Maps the current inner iterate to the next one, with the other block
  /// frozen and the outer anchor u^{t-1} available.
  virtual Matrix step(const Matrix& current, const Matrix& frozen, const Matrix& anchor,
                      double eta) = 0;
};

struct ProximalRule {
  double zeta = 1.0;  // > 0
};

struct ProxLinearRule {
  double safety = 1.5;  // sigma > 1, step weight gamma = sigma * L
};

struct EmbeddedRule {
  std::shared_ptr<EmbeddedOperator> op;
  double c = 0.4;    // error-control constant, 0 < 2c < eta
  double eta = 1.0;  // proximal weight of the embedded subproblem
  int k_max = 20;
  int check_every = 1;
  /// Safety factor of the prox-linear step taken when k_max propagations
  /// exhaust without meeting the error criterion.
  double fallback_safety = 1.5;

  void validate() const;
};

using UpdateRule = std::variant<ProximalRule, ProxLinearRule, EmbeddedRule>;

/// Intermediate variable and first-order residual of an inexact update.
struct ErrorEstimate {
  Matrix tilde_u;
  Matrix e;
  double e_norm = 0;
};

struct EmbeddedOutcome {
  Matrix value;  // accepted iterate: tilde_u, or the fallback prox-linear step
  ErrorEstimate estimate;
  int inner_steps = 0;
  bool fallback = false;
  /// Raw operator output behind the accepted estimate (empty on fallback).
  Matrix raw_candidate;
  /// gamma - L of the fallback step, NaN when no fallback happened.
  double fallback_gamma_gap = std::numeric_limits<double>::quiet_NaN();
};

/// Exact proximal update: the registered closed-form minimizer of
/// sep(u) + H(u, frozen) + (zeta/2)||u - anchor||^2. Throws
/// UnsupportedUpdateError when the problem registers no solver for the block.
Matrix proximal_step(const BlockProblem& problem, Block block, const Matrix& anchor,
                     const Matrix& frozen, double zeta);

/// Prox-linear update at step weight gamma = safety * lipschitz:
/// prox_sep^gamma(anchor - grad H(anchor, frozen) / gamma).
Matrix prox_linear_step(const BlockProblem& problem, Block block, const Matrix& anchor,
                        const Matrix& frozen, double lipschitz, double safety);

/// Partial-Lipschitz bound of the block's coupling gradient at the frozen
/// other block, via the problem's registered hook.
double estimate_partial_lipschitz(const BlockProblem& problem, Block block, const Matrix& frozen);

/// Largest eigenvalue of A^T A (squared spectral norm of A) by power
/// iteration to the given relative tolerance. Throws NumericalFailure if the
/// iteration has not settled after max_iters steps.
double gram_spectral_norm(const Matrix& a, double rel_tol = 1e-4, int max_iters = 500);

/// Computable first-order residual of `candidate` for the subproblem
///   min_u sep(u) + H(u, frozen) + (eta/2)||u - anchor||^2:
/// with P(u) = (1 - eta) u - grad H(u, frozen),
///   tilde_u = prox^1(eta * anchor + P(candidate)),
///   e       = P(candidate) - P(tilde_u).
ErrorEstimate error_estimate(const BlockProblem& problem, Block block, const Matrix& candidate,
                             const Matrix& anchor, const Matrix& frozen, double eta);

/// Error-control test ||e|| <= c * eps (vacuously true at eps = +inf).
bool criterion_check(double e_norm, double c, double eps);

/// Task-embedded update: propagate from the anchor, checking the error
/// criterion every `check_every` steps, and return the accepted intermediate
/// tilde_u. Falls back to one prox-linear step when k_max propagations do not
/// meet the criterion.
EmbeddedOutcome embedded_update(const BlockProblem& problem, Block block, const Matrix& anchor,
                                const Matrix& frozen, double eps, const EmbeddedRule& rule);

}  // namespace tecu

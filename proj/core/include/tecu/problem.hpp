#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tecu {

using Matrix = Eigen::MatrixXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Absolute per-entry (or per-column) tolerance for indicator-set membership.
inline constexpr double kFeasibilityTol = 1e-10;

enum class Block { X, Y };

inline const char* block_name(Block b) { return b == Block::X ? "x" : "y"; }
inline Block other_block(Block b) { return b == Block::X ? Block::Y : Block::X; }

struct Shape {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  bool matches(const Matrix& m) const { return m.rows() == rows && m.cols() == cols; }
};

/// Thrown when a rule requires a capability the problem does not register
/// (e.g. a proximal update without an exact subproblem solver).
class UnsupportedUpdateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle bundle for one two-block problem
///   min_{x,y}  f(x) + g(y) + H(x,y)
/// with f, g proper l.s.c. (extended-real valued, +inf encodes indicator
/// constraints) and H continuously differentiable in both blocks.
///
/// The mandatory oracles are the separable values, the coupling value and
/// its partial gradients, and exact proximal maps of f and g. The optional
/// hooks register task knowledge: closed-form subproblem solvers (needed by
/// proximal updates), partial-Lipschitz bounds (needed by prox-linear
/// updates), and feasible-point samplers (needed by validate_problem).
struct BlockProblem {
  std::function<double(const Matrix&)> f_value;
  std::function<double(const Matrix&)> g_value;
  std::function<double(const Matrix&, const Matrix&)> h_value;
  std::function<Matrix(const Matrix&, const Matrix&)> h_grad_x;
  std::function<Matrix(const Matrix&, const Matrix&)> h_grad_y;
  /// prox_f(v, tau) = argmin_w f(w) + (tau/2) ||w - v||^2, exact.
  std::function<Matrix(const Matrix&, double)> prox_f;
  std::function<Matrix(const Matrix&, double)> prox_g;
  Shape x_shape;
  Shape y_shape;

  /// Exact minimizer of u -> sep(u) + H(u, frozen) + (zeta/2)||u - current||^2.
  /// Leave empty when the block has no closed-form proximal subproblem.
  std::function<Matrix(const Matrix& current, const Matrix& frozen, double zeta)> exact_solver_x;
  std::function<Matrix(const Matrix& current, const Matrix& frozen, double zeta)> exact_solver_y;

  /// Upper bound on the Lipschitz constant of the partial gradient at the
  /// given frozen other block.
  std::function<double(const Matrix& frozen)> lipschitz_x;
  std::function<double(const Matrix& frozen)> lipschitz_y;

  /// Random feasible point of the block's domain.
  std::function<Matrix(std::mt19937_64&)> sample_x;
  std::function<Matrix(std::mt19937_64&)> sample_y;

  const Shape& shape(Block b) const { return b == Block::X ? x_shape : y_shape; }

  double separable_value(Block b, const Matrix& u) const {
    return b == Block::X ? f_value(u) : g_value(u);
  }

  /// H with the designated block in `u` and the other block frozen.
  double coupling_value(Block b, const Matrix& u, const Matrix& frozen) const {
    return b == Block::X ? h_value(u, frozen) : h_value(frozen, u);
  }

  Matrix coupling_grad(Block b, const Matrix& u, const Matrix& frozen) const {
    return b == Block::X ? h_grad_x(u, frozen) : h_grad_y(frozen, u);
  }

  Matrix prox(Block b, const Matrix& v, double tau) const {
    return b == Block::X ? prox_f(v, tau) : prox_g(v, tau);
  }

  bool has_exact_solver(Block b) const {
    return static_cast<bool>(b == Block::X ? exact_solver_x : exact_solver_y);
  }

  Matrix exact_solve(Block b, const Matrix& current, const Matrix& frozen, double zeta) const {
    const auto& solver = b == Block::X ? exact_solver_x : exact_solver_y;
    if (!solver) {
      throw UnsupportedUpdateError(std::string("no exact subproblem solver registered for block ") +
                                   block_name(b));
    }
    return solver(current, frozen, zeta);
  }

  bool has_lipschitz(Block b) const {
    return static_cast<bool>(b == Block::X ? lipschitz_x : lipschitz_y);
  }

  double lipschitz(Block b, const Matrix& frozen) const {
    const auto& hook = b == Block::X ? lipschitz_x : lipschitz_y;
    if (!hook) {
      throw UnsupportedUpdateError(std::string("no partial-Lipschitz bound registered for block ") +
                                   block_name(b));
    }
    return hook(frozen);
  }

  Matrix sample(Block b, std::mt19937_64& rng) const {
    const auto& sampler = b == Block::X ? sample_x : sample_y;
    if (!sampler) {
      throw UnsupportedUpdateError(std::string("no feasible-point sampler registered for block ") +
                                   block_name(b));
    }
    return sampler(rng);
  }
};

/// Rolling three-iterate window of one solve plus the error budgets
/// eps_u = ||u^{t-1} - u^{t-2}|| in force at the current iteration.
struct IterateState {
  Matrix x_t, y_t;
  Matrix x_prev, y_prev;
  Matrix x_prev2, y_prev2;
  double eps_x = kInfinity;
  double eps_y = kInfinity;
  int iteration = 0;

  static IterateState initial(Matrix x0, Matrix y0) {
    IterateState s;
    s.x_prev2 = x0;
    s.y_prev2 = y0;
    s.x_prev = x0;
    s.y_prev = y0;
    s.x_t = std::move(x0);
    s.y_t = std::move(y0);
    return s;
  }

  /// Budget the next iteration would use; becomes eps_x after advance().
  double peek_eps_x() const { return iteration + 1 >= 2 ? (x_t - x_prev).norm() : kInfinity; }
  double peek_eps_y() const { return iteration + 1 >= 2 ? (y_t - y_prev).norm() : kInfinity; }

  /// Shifts the window by one slot and refreshes the eps lookbacks.
  void advance(Matrix x_new, Matrix y_new) {
    x_prev2 = std::move(x_prev);
    y_prev2 = std::move(y_prev);
    x_prev = std::move(x_t);
    y_prev = std::move(y_t);
    x_t = std::move(x_new);
    y_t = std::move(y_new);
    ++iteration;
    eps_x = iteration >= 2 ? (x_prev - x_prev2).norm() : kInfinity;
    eps_y = iteration >= 2 ? (y_prev - y_prev2).norm() : kInfinity;
  }
};

/// One line of the per-outer-iteration log.
struct TraceRecord {
  int iteration = 0;
  double objective = 0;  // Psi(z^t)
  double phi = 0;        // Lyapunov value Phi(z^t, z^{t-1})
  double step_norm_x = 0;
  double step_norm_y = 0;
  double rel_change_x = 0;
  double rel_change_y = 0;
  double rel_change_obj = 0;
  double err_norm_x = 0;  // ||e_x^t||, 0 for exact updates
  double err_norm_y = 0;
  int inner_steps_x = 1;
  int inner_steps_y = 1;
  double wall_time_s = 0;

  // Diagnostics beyond the CSV schema.
  double eps_x = kInfinity;
  double eps_y = kInfinity;
  bool fallback_x = false;
  bool fallback_y = false;
  /// Per-iteration sufficient-descent coefficient of the rule applied.
  double margin_x = 0;
  double margin_y = 0;
  /// gamma - L for prox-linear (or fallback) steps, NaN otherwise.
  double gamma_gap_x = std::numeric_limits<double>::quiet_NaN();
  double gamma_gap_y = std::numeric_limits<double>::quiet_NaN();
};

/// Psi(x, y) = f(x) + g(y) + H(x, y). Returns +inf iff an indicator is
/// violated; throws std::invalid_argument on shape mismatch.
double evaluate_objective(const BlockProblem& problem, const Matrix& x, const Matrix& y);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double worst_error = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Probes the problem's oracles at random feasible points: partial gradients
/// against central finite differences (step 1e-5, relative error < 1e-4 on
/// random directions) and proximal maps against feasibility, idempotency and
/// sampled prox-objective optimality (gap <= 1e-8).
ValidationReport validate_problem(const BlockProblem& problem, int probe_count,
                                  unsigned seed = 20240801u);

}  // namespace tecu

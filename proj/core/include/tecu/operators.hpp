#pragma once

#include <Eigen/Dense>

#include "tecu/problem.hpp"
#include "tecu/updates.hpp"

namespace tecu {

/// Exact prox of lambda*||.||_0 at weight tau: keeps v_i when
/// |v_i| > sqrt(2*lambda/tau), zeroes it otherwise (ties go to zero).
Matrix hard_threshold(const Matrix& v, double lambda, double tau);

/// Columnwise projection onto unit-norm columns. An exactly zero column maps
/// to the first canonical basis vector.
Matrix sphere_project(const Matrix& d);

/// Elementwise clamp onto [lo, hi]. Throws std::invalid_argument when
/// lo > hi anywhere.
Matrix box_project(const Matrix& v, const Matrix& lo, const Matrix& hi);
Matrix box_project(const Matrix& v, double lo, double hi);
Matrix box_project(const Matrix& v, double lo, const Matrix& hi);

/// Scaled-ADMM state for the unit-norm dictionary subproblem
///   min_D 1/2 ||Y - D W^T||^2 + (eta/2) ||D - D_anchor||^2 + X_D(D).
/// Reset at the start of every outer iteration with Z = D^{t-1}, U = 0.
struct AdmmContext {
  Matrix z;
  Matrix u;
  double rho = 1.0;

  // Quantities constant within one outer iteration, built on first use.
  bool cache_ready = false;
  Eigen::LLT<Matrix> system;
  Matrix rhs_base;  // Y W + eta * D_anchor
};

/// Fresh context with Z = d_start, U = 0 and rho = max(1, tr(W^T W)/m).
AdmmContext make_admm_context(const Matrix& d_start, const Matrix& w);

/// One scaled ADMM pass. Solves D (W^T W + (eta+rho) I) = Y W + eta D_anchor
/// + rho (Z - U) through the cached factorization, projects Z, updates U, and
/// returns Z (always feasible) as the candidate iterate.
Matrix admm_d_step(AdmmContext& context, const Matrix& d_cur, const Matrix& w, const Matrix& data_y,
                   const Matrix& d_anchor, double eta);

struct PithConfig {
  /// Gradient step size; must satisfy tau * (||D^T D||_2 + eta) < 1.
  double step_size = 0.0;
};

/// One proximal iterative hard-thresholding pass on
///   min_W lambda ||W||_0 + 1/2 ||Y - D W^T||^2 + (eta/2) ||W - W_anchor||^2:
/// a gradient step on the smooth part followed by hard_threshold at weight
/// 1/tau.
Matrix pith_w_step(const Matrix& w_cur, const Matrix& d, const Matrix& data_y,
                   const Matrix& w_anchor, double eta, double lambda, const PithConfig& config);

/// Mean filter over the (2*radius+1)^2 window clipped to the image.
Matrix box_filter(const Matrix& image, int radius);

/// Smoothing surrogate for a learned illumination propagator: box-filters
/// max(O, I) and projects back onto [0, O]. r, i_anchor and eta are accepted
/// for interface uniformity with other propagation operators.
Matrix illumination_propagate(const Matrix& i_cur, const Matrix& r, const Matrix& o,
                              const Matrix& i_anchor, double eta, int radius);

/// ADMM propagation for the dictionary block of the l0 dictionary-learning
/// task. frozen = W, anchor = D^{t-1}.
class AdmmDictionaryOperator final : public EmbeddedOperator {
 public:
  explicit AdmmDictionaryOperator(Matrix data_y) : data_y_(std::move(data_y)) {}

  void reset(const Matrix& start, const Matrix& frozen, double eta) override;
  Matrix step(const Matrix& current, const Matrix& frozen, const Matrix& anchor,
              double eta) override;

 private:
  Matrix data_y_;
  AdmmContext context_;
};

/// PITH propagation for the code block. frozen = D, anchor = W^{t-1}.
/// The step size is refreshed at each outer iteration from the current
/// partial-Lipschitz bound: tau = 0.9 / (1.01 ||D^T D||_2 + eta).
class PithCodeOperator final : public EmbeddedOperator {
 public:
  PithCodeOperator(Matrix data_y, double lambda) : data_y_(std::move(data_y)), lambda_(lambda) {}

  void reset(const Matrix& start, const Matrix& frozen, double eta) override;
  Matrix step(const Matrix& current, const Matrix& frozen, const Matrix& anchor,
              double eta) override;

 private:
  Matrix data_y_;
  double lambda_ = 0;
  PithConfig config_;
};

/// Pluggable illumination propagator for the Retinex task. frozen = R.
class IlluminationOperator final : public EmbeddedOperator {
 public:
  IlluminationOperator(Matrix observed, int radius)
      : observed_(std::move(observed)), radius_(radius) {}

  Matrix step(const Matrix& current, const Matrix& frozen, const Matrix& anchor,
              double eta) override;

 private:
  Matrix observed_;
  int radius_ = 2;
};

}  // namespace tecu

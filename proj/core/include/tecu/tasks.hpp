#pragma once

#include "tecu/problem.hpp"

namespace tecu {

/// l0-regularized dictionary learning
///   min_{W,D} lambda ||W||_0 + X_D(D) + 1/2 ||Y - D W^T||^2
/// with x = W (p x m codes) and y = D (n x m dictionary, unit-norm columns).
struct DlInstance {
  Matrix data_y;       // n x p
  double lambda = 0.1;  // > 0
  int m = 32;          // dictionary size

  Eigen::Index n() const { return data_y.rows(); }
  Eigen::Index p() const { return data_y.cols(); }
};

BlockProblem build_dl_problem(const DlInstance& inst);

/// Retinex low-light decomposition
///   min_{I,R} alpha/2 ||grad I||^2 + X_I(I) + X_R(R) + 1/2 ||O - I.*R||^2
/// with x = I (illumination, boxed to [0, O]) and y = R (reflectance, boxed
/// to [0, 1]). Gradients are forward differences with replicate boundary.
struct LieInstance {
  Matrix observed;     // entries in [0, 1]
  double alpha = 1.0;  // > 0
};

BlockProblem build_lie_problem(const LieInstance& inst);

struct SynthSpec {
  int n = 16;
  int m = 32;
  int p = 200;
  int sparsity = 3;  // nonzeros per code row, 1 <= s <= m
  double noise_sigma = 0.01;
  unsigned seed = 0;
};

struct SynthData {
  Matrix data_y;  // n x p
  Matrix d_true;  // n x m, unit-norm columns
  Matrix w_true;  // p x m, exactly `sparsity` nonzeros per row
};

/// Y = D_true W_true^T + noise, deterministic under the seed.
SynthData synth_dl_data(const SynthSpec& spec);

/// D0 = sphere_project(Gaussian); the conventional W0 is the zero matrix.
Matrix dl_init_dictionary(Eigen::Index n, Eigen::Index m, unsigned seed);

/// Forward-difference smoothness energy ||grad I||^2 (replicate boundary).
double lie_smoothness_energy(const Matrix& image);

/// Gradient of 1/2 ||grad I||^2, i.e. the discrete Laplacian matching
/// lie_smoothness_energy's boundary handling.
Matrix lie_smoothness_grad(const Matrix& image);

}  // namespace tecu

// Infinite-horizon LQR: Riccati fixed point, gain, control action and
// Monte Carlo cost evaluation.
#pragma once

#include <Eigen/Dense>

#include "wams/grid_model.hpp"
#include "wams/rng.hpp"

namespace wams {

struct LqrConfig {
    Eigen::MatrixXd q_weight;          // state cost, symmetric PD
    Eigen::MatrixXd p_weight;          // input cost, symmetric PD
    double beta = 1.0;                 // per-slot discount in (0, 1]
    double riccati_tol = 1e-10;        // Frobenius residual target
    long riccati_max_iter = 1000000;   // iteration cap

    /// Identity weights for an n-state, u-input system.
    static LqrConfig identity(int n, int u);
};

struct RiccatiSolution {
    Eigen::MatrixXd s_matrix;
    long iterations = 0;
    double residual = 0.0;
};

/// Frobenius norm of S - (A^T (S - S B (B^T S B + P)^-1 B^T S) A + Q),
/// recomputable independently of the solver.
double riccati_residual(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                        const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                        const Eigen::MatrixXd& s);

/// Fixed-point iteration from S0 = Q, symmetrized each step. Throws
/// ConfigError for non-PD weights and NumericalError when the iteration
/// fails to reach riccati_tol within the cap (unstabilizable system).
RiccatiSolution solve_riccati(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                              const LqrConfig& cfg);

/// K = (B^T S B + P)^-1 B^T S A, so that u = -K x_hat.
Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                         const RiccatiSolution& s, const Eigen::MatrixXd& p_weight);

/// u = -K x_hat.
Eigen::VectorXd control(const Eigen::MatrixXd& k_gain, const StateVector& x_hat);

/// Monte Carlo estimate of J = E[ sum_{t=0}^{horizon-1} beta^t (x'Qx + u'Pu) ]
/// under u = -K x with perfect state feedback, starting from x0.
double evaluate_cost(const GridModel& model, const Eigen::MatrixXd& k_gain,
                     const LqrConfig& cfg, const Eigen::VectorXd& x0, long horizon,
                     int n_runs, Rng& rng);

} // namespace wams

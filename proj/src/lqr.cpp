#include "wams/lqr.hpp"

#include "wams/errors.hpp"
#include "wams/linalg.hpp"

#include <cmath>
#include <string>

namespace wams {

namespace {

void check_weights(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p) {
    if (!is_symmetric(q) || min_symmetric_eigenvalue(q) <= 0.0)
        throw ConfigError("q_weight must be symmetric positive definite");
    if (!is_symmetric(p) || min_symmetric_eigenvalue(p) <= 0.0)
        throw ConfigError("p_weight must be symmetric positive definite");
}

Eigen::MatrixXd riccati_map(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                            const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                            const Eigen::MatrixXd& s) {
    const Eigen::MatrixXd bsb_p = b.transpose() * s * b + p;
    const Eigen::MatrixXd gain = bsb_p.llt().solve(b.transpose() * s);
    return a.transpose() * (s - s * b * gain) * a + q;
}

} // namespace

LqrConfig LqrConfig::identity(int n, int u) {
    LqrConfig cfg;
    cfg.q_weight = Eigen::MatrixXd::Identity(n, n);
    cfg.p_weight = Eigen::MatrixXd::Identity(u, u);
    return cfg;
}

double riccati_residual(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                        const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                        const Eigen::MatrixXd& s) {
    return (riccati_map(a_d, b_d, q, p, s) - s).norm();
}

RiccatiSolution solve_riccati(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                              const LqrConfig& cfg) {
    if (a_d.rows() != a_d.cols()) throw ConfigError("solve_riccati: a_d must be square");
    if (b_d.rows() != a_d.rows()) throw ConfigError("solve_riccati: b_d rows must match a_d");
    check_weights(cfg.q_weight, cfg.p_weight);
    if (cfg.riccati_tol <= 0.0) throw ConfigError("riccati_tol must be positive");

    RiccatiSolution sol;
    Eigen::MatrixXd s = cfg.q_weight;
    for (long it = 1; it <= cfg.riccati_max_iter; ++it) {
        Eigen::MatrixXd next = riccati_map(a_d, b_d, cfg.q_weight, cfg.p_weight, s);
        next = 0.5 * (next + next.transpose()).eval();
        const double delta = (next - s).norm();
        s = std::move(next);
        if (delta <= 0.5 * cfg.riccati_tol) {
            const double resid = riccati_residual(a_d, b_d, cfg.q_weight, cfg.p_weight, s);
            if (resid <= cfg.riccati_tol) {
                sol.s_matrix = std::move(s);
                sol.iterations = it;
                sol.residual = resid;
                return sol;
            }
        }
    }
    throw NumericalError("solve_riccati: no convergence within " +
                         std::to_string(cfg.riccati_max_iter) +
                         " iterations (system not stabilizable?)");
}

Eigen::MatrixXd lqr_gain(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& b_d,
                         const RiccatiSolution& s, const Eigen::MatrixXd& p_weight) {
    const Eigen::MatrixXd bsb_p = b_d.transpose() * s.s_matrix * b_d + p_weight;
    Eigen::LLT<Eigen::MatrixXd> llt(bsb_p);
    if (llt.info() != Eigen::Success)
        throw ConfigError("lqr_gain: B^T S B + P is not positive definite");
    return llt.solve(b_d.transpose() * s.s_matrix * a_d);
}

Eigen::VectorXd control(const Eigen::MatrixXd& k_gain, const StateVector& x_hat) {
    if (k_gain.cols() != x_hat.values.size())
        throw InputError("control: gain/state dimension mismatch");
    return -k_gain * x_hat.values;
}

double evaluate_cost(const GridModel& model, const Eigen::MatrixXd& k_gain,
                     const LqrConfig& cfg, const Eigen::VectorXd& x0, long horizon,
                     int n_runs, Rng& rng) {
    if (horizon < 1) throw ConfigError("evaluate_cost: horizon must be >= 1");
    if (n_runs < 1) throw ConfigError("evaluate_cost: n_runs must be >= 1");
    double total = 0.0;
    for (int run = 0; run < n_runs; ++run) {
        StateVector x{x0, 0};
        double j = 0.0;
        double beta_t = 1.0;
        for (long t = 0; t < horizon; ++t) {
            const Eigen::VectorXd u = -k_gain * x.values;
            j += beta_t * (x.values.dot(cfg.q_weight * x.values) + u.dot(cfg.p_weight * u));
            beta_t *= cfg.beta;
            x = step(model, x, u, rng);
        }
        total += j;
    }
    return total / n_runs;
}

} // namespace wams

#include "wams/grid_model.hpp"

#include "wams/errors.hpp"
#include "wams/linalg.hpp"

#include <string>

namespace wams {

GridModel::GridModel(Eigen::MatrixXd a_d, Eigen::MatrixXd b_d, Eigen::MatrixXd c_obs,
                     Eigen::MatrixXd w_cov, Eigen::VectorXd v_var, double dt)
    : a_d_(std::move(a_d)),
      b_d_(std::move(b_d)),
      c_obs_(std::move(c_obs)),
      w_cov_(std::move(w_cov)),
      v_var_(std::move(v_var)),
      dt_(dt) {
    const auto n = a_d_.rows();
    if (n == 0 || a_d_.cols() != n)
        throw ConfigError("a_d must be square and non-empty");
    if (b_d_.rows() != n)
        throw ConfigError("b_d must have " + std::to_string(n) + " rows");
    if (c_obs_.cols() != n)
        throw ConfigError("c_obs must have " + std::to_string(n) + " columns");
    if (c_obs_.rows() == 0)
        throw ConfigError("c_obs must have at least one row");
    if (v_var_.size() != c_obs_.rows())
        throw ConfigError("v_var must have one entry per PMU (" +
                          std::to_string(c_obs_.rows()) + ")");
    if ((v_var_.array() <= 0.0).any())
        throw ConfigError("v_var entries must be strictly positive");
    if (dt_ <= 0.0)
        throw ConfigError("dt must be positive");
    if (w_cov_.rows() != n || w_cov_.cols() != n)
        throw ConfigError("w_cov must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_symmetric(w_cov_))
        throw ConfigError("w_cov must be symmetric");
    w_sqrt_ = psd_sqrt(w_cov_, "w_cov");
}

GridModel GridModel::with_noise(Eigen::MatrixXd w_cov, Eigen::VectorXd v_var) const {
    return GridModel(a_d_, b_d_, c_obs_, std::move(w_cov), std::move(v_var), dt_);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
discretize(const Eigen::MatrixXd& a_cont, const Eigen::MatrixXd& b_cont, double dt,
           DiscretizeSign sign) {
    if (dt <= 0.0) throw ConfigError("discretize: dt must be positive");
    if (a_cont.rows() != a_cont.cols())
        throw ConfigError("discretize: a_cont must be square");
    if (b_cont.rows() != a_cont.rows())
        throw ConfigError("discretize: b_cont row count must match a_cont");
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(a_cont.rows(), a_cont.cols());
    Eigen::MatrixXd a_d =
        sign == DiscretizeSign::MinusDtA ? (eye - dt * a_cont).eval() : (eye + dt * a_cont).eval();
    return {std::move(a_d), dt * b_cont};
}

StateVector step(const GridModel& model, const StateVector& x,
                 const Eigen::VectorXd& u, Rng& rng) {
    if (x.values.size() != model.state_dim())
        throw InputError("step: state dimension mismatch");
    if (u.size() != model.input_dim())
        throw InputError("step: input dimension mismatch");
    const Eigen::VectorXd z = rng.gaussian_vector(model.state_dim());
    StateVector next;
    next.values = model.a_d() * x.values + model.b_d() * u + model.noise_factor() * z;
    next.slot = x.slot + 1;
    return next;
}

MeasurementFrame observe(const GridModel& model, const StateVector& x, Rng& rng) {
    if (x.values.size() != model.state_dim())
        throw InputError("observe: state dimension mismatch");
    MeasurementFrame frame;
    frame.values = model.c_obs() * x.values;
    for (int n = 0; n < model.pmu_count(); ++n)
        frame.values[n] += std::sqrt(model.v_var()[n]) * rng.gaussian();
    frame.stamps.assign(model.pmu_count(), x.slot);
    return frame;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> five_machine_continuous() {
    // Frequency deviations of five identical machines coupled on a ring.
    // A_cont = damping*I + stiffness*L with L the ring Laplacian; written in
    // the convention where a_d = I - dt*A_cont is stable.
    constexpr int n = 5;
    constexpr double damping = 0.8;
    constexpr double stiffness = 6.0;
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        laplacian(i, i) += 1.0;
        laplacian(j, j) += 1.0;
        laplacian(i, j) -= 1.0;
        laplacian(j, i) -= 1.0;
    }
    Eigen::MatrixXd a_cont = damping * Eigen::MatrixXd::Identity(n, n) + stiffness * laplacian;
    Eigen::MatrixXd b_cont = Eigen::MatrixXd::Identity(n, n);
    return {std::move(a_cont), std::move(b_cont)};
}

GridModel default_five_machine() {
    constexpr double dt = 0.02;
    auto [a_cont, b_cont] = five_machine_continuous();
    auto [a_d, b_d] = discretize(a_cont, b_cont, dt);
    const int n = 5;
    return GridModel(std::move(a_d), std::move(b_d), Eigen::MatrixXd::Identity(n, n),
                     1e-4 * Eigen::MatrixXd::Identity(n, n),
                     Eigen::VectorXd::Constant(n, 1e-3), dt);
}

} // namespace wams

// Discrete-time linear grid model: state propagation, noisy observation,
// first-order discretization and the default five-machine system.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "wams/rng.hpp"

namespace wams {

/// Sign convention for first-order discretization of a continuous model.
/// The printed form is a_d = I - dt*A; models stated as xdot = A x need
/// the flipped sign a_d = I + dt*A.
enum class DiscretizeSign { MinusDtA, PlusDtA };

struct StateVector {
    Eigen::VectorXd values;
    std::int64_t slot = 0;
};

/// One reporting frame as assembled at the PMUs. `stamps[n]` is the slot
/// index PMU n claims for its sample; at this layer stamps are always
/// truthful (attacks re-stamp downstream).
struct MeasurementFrame {
    Eigen::VectorXd values;
    std::vector<std::int64_t> stamps;

    int pmu_count() const { return static_cast<int>(values.size()); }
};

/// Immutable discrete-time model
///   x(t+1) = a_d x(t) + b_d u(t) + w(t),   w ~ N(0, w_cov)
///   y(t)   = c_obs x(t) + v(t),            v_n ~ N(0, v_var[n])
/// Dimensions and noise parameters are validated on construction; the
/// PSD factor of w_cov is precomputed so stepping never re-factorizes.
class GridModel {
public:
    GridModel(Eigen::MatrixXd a_d, Eigen::MatrixXd b_d, Eigen::MatrixXd c_obs,
              Eigen::MatrixXd w_cov, Eigen::VectorXd v_var, double dt);

    int state_dim() const { return static_cast<int>(a_d_.rows()); }
    int input_dim() const { return static_cast<int>(b_d_.cols()); }
    int pmu_count() const { return static_cast<int>(c_obs_.rows()); }

    const Eigen::MatrixXd& a_d() const { return a_d_; }
    const Eigen::MatrixXd& b_d() const { return b_d_; }
    const Eigen::MatrixXd& c_obs() const { return c_obs_; }
    const Eigen::MatrixXd& w_cov() const { return w_cov_; }
    const Eigen::VectorXd& v_var() const { return v_var_; }
    double dt() const { return dt_; }

    /// F with F F^T = w_cov, used to draw process noise.
    const Eigen::MatrixXd& noise_factor() const { return w_sqrt_; }

    /// Copy of this model with different noise parameters (same dynamics).
    GridModel with_noise(Eigen::MatrixXd w_cov, Eigen::VectorXd v_var) const;

private:
    Eigen::MatrixXd a_d_, b_d_, c_obs_, w_cov_, w_sqrt_;
    Eigen::VectorXd v_var_;
    double dt_;
};

/// First-order discretization per the sign convention above:
///   a_d = I -/+ dt*a_cont,  b_d = dt*b_cont.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
discretize(const Eigen::MatrixXd& a_cont, const Eigen::MatrixXd& b_cont, double dt,
           DiscretizeSign sign = DiscretizeSign::MinusDtA);

/// x(t+1) = a_d x + b_d u + w. Always consumes exactly state_dim() normal
/// draws so RNG streams stay aligned when noise is switched off.
StateVector step(const GridModel& model, const StateVector& x,
                 const Eigen::VectorXd& u, Rng& rng);

/// y = c_obs x + v with truthful stamps. Consumes pmu_count() normal draws.
MeasurementFrame observe(const GridModel& model, const StateVector& x, Rng& rng);

/// Five identical machines on a stiffness ring (linearized swing coupling of
/// frequency deviations), identity observation, dt = 0.02 s. Discretized with
/// the I - dt*A convention; spectral radius < 1.
GridModel default_five_machine();

/// Continuous-time matrices behind default_five_machine(), exposed for
/// configs that override noise or discretization.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> five_machine_continuous();

} // namespace wams

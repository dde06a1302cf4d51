#include "wams/linalg.hpp"

#include "wams/errors.hpp"

#include <cmath>
#include <limits>

namespace wams {

double spectral_radius(const Eigen::MatrixXd& m) {
    return m.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, const std::string& label, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd evals = es.eigenvalues();
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals[i] < -tol)
            throw ConfigError(label + ": not positive semidefinite (eigenvalue " +
                              std::to_string(evals[i]) + ")");
        if (evals[i] < 0.0) evals[i] = 0.0;
    }
    return es.eigenvectors() * evals.cwiseSqrt().asDiagonal();
}

double log_sum_exp(const Eigen::VectorXd& v) {
    const double m = v.maxCoeff();
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::exp(v[i] - m);
    return m + std::log(s);
}

Eigen::MatrixXd drop_row(const Eigen::MatrixXd& m, std::optional<int> n) {
    if (!n) return m;
    Eigen::MatrixXd out(m.rows() - 1, m.cols());
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i == *n) continue;
        out.row(r++) = m.row(i);
    }
    return out;
}

Eigen::VectorXd drop_entry(const Eigen::VectorXd& v, std::optional<int> n) {
    if (!n) return v;
    Eigen::VectorXd out(v.size() - 1);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i == *n) continue;
        out[r++] = v[i];
    }
    return out;
}

} // namespace wams

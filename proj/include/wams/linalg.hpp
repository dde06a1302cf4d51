// Small dense linear-algebra helpers shared by the model and filter code.
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>

namespace wams {

/// Largest absolute eigenvalue of a (possibly non-symmetric) real matrix.
double spectral_radius(const Eigen::MatrixXd& m);

/// True when ||m - m^T||_inf <= tol.
bool is_symmetric(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Smallest eigenvalue of a symmetric matrix.
double min_symmetric_eigenvalue(const Eigen::MatrixXd& m);

/// Factor F with F F^T = m for a symmetric PSD matrix. Eigenvalues in
/// [-tol, 0) are clamped to zero; below -tol throws wams::ConfigError with
/// `label` in the message.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, const std::string& label,
                         double tol = 1e-10);

/// logsumexp over a vector, safe against -inf entries.
double log_sum_exp(const Eigen::VectorXd& v);

/// Matrix with row `n` removed; passing nullopt returns the input unchanged.
Eigen::MatrixXd drop_row(const Eigen::MatrixXd& m, std::optional<int> n);

/// Vector with entry `n` removed; nullopt returns the input unchanged.
Eigen::VectorXd drop_entry(const Eigen::VectorXd& v, std::optional<int> n);

} // namespace wams

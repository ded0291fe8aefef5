#pragma once

#include <vector>

#include <Eigen/Dense>

#include "optomech/model.hpp"

namespace optomech {

// Steady-state covariance matrix of quadrature fluctuations, vacuum
// normalized to 1/2 per quadrature. Symmetrized on construction.
class CovarianceMatrix {
public:
    CovarianceMatrix(Eigen::MatrixXd entries, std::vector<Mode> mode_labels);

    const Eigen::MatrixXd& matrix() const { return v_; }
    const std::vector<Mode>& modes() const { return modes_; }
    int mode_count() const { return static_cast<int>(modes_.size()); }
    int dim() const { return static_cast<int>(v_.rows()); }

    Eigen::Matrix2d block(int mode_i, int mode_j) const;

    // Marginal state of the selected modes.
    CovarianceMatrix reduced(const std::vector<int>& keep_modes) const;

    // Positive symplectic spectrum of i Omega V, ascending.
    Eigen::VectorXd symplectic_eigenvalues() const;

    // V + (i/2) Omega >= 0, via min symplectic eigenvalue >= 1/2 - slack.
    bool is_physical(double slack = 1e-9) const;

private:
    Eigen::MatrixXd v_;
    std::vector<Mode> modes_;
};

// Positive symplectic spectrum of an arbitrary symmetric matrix in (q,p)
// mode ordering (used on partial transposes, where values below 1/2 signal
// entanglement).
Eigen::VectorXd symplectic_spectrum(const Eigen::MatrixXd& v);

// Solve A V + V A^T = -D for the steady-state covariance. A must be strictly
// stable and D symmetric positive semidefinite; the solve is a dense linear
// system in the n(n+1)/2 independent entries of V.
CovarianceMatrix solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                std::vector<Mode> mode_labels = {});

// Stability-gated convenience: checks the model's stability (Routh-Hurwitz
// for the single-mode variant, eigenvalues otherwise), then solves with the
// Markovian diffusion matrix.
CovarianceMatrix steady_state_cm(const LinearizedModel& m);

} // namespace optomech

#include "optomech/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "optomech/errors.hpp"
#include "optomech/stability.hpp"

namespace optomech {

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries, std::vector<Mode> mode_labels)
    : v_(std::move(entries)), modes_(std::move(mode_labels)) {
    if (v_.rows() != v_.cols() || v_.rows() % 2 != 0 || v_.rows() == 0) {
        throw ValidationError("CovarianceMatrix: entries must be square with even dimension");
    }
    if (modes_.empty()) {
        modes_.assign(static_cast<size_t>(v_.rows() / 2), Mode::optical_a);
    }
    if (static_cast<int>(modes_.size()) * 2 != v_.rows()) {
        throw ValidationError("CovarianceMatrix: mode labels do not match dimension");
    }
    v_ = ((v_ + v_.transpose()) / 2.0).eval();
}

Eigen::Matrix2d CovarianceMatrix::block(int mode_i, int mode_j) const {
    return v_.block<2, 2>(2 * mode_i, 2 * mode_j);
}

CovarianceMatrix CovarianceMatrix::reduced(const std::vector<int>& keep_modes) const {
    const int n = static_cast<int>(keep_modes.size());
    Eigen::MatrixXd out(2 * n, 2 * n);
    std::vector<Mode> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<size_t>(i)] = modes_[static_cast<size_t>(keep_modes[i])];
        for (int j = 0; j < n; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = block(keep_modes[i], keep_modes[j]);
        }
    }
    return {out, labels};
}

Eigen::VectorXd symplectic_spectrum(const Eigen::MatrixXd& v) {
    const int n = static_cast<int>(v.rows()) / 2;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(omega * v, false);
    std::vector<double> mags(static_cast<size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) mags[static_cast<size_t>(i)] = std::abs(es.eigenvalues()[i].imag());
    std::sort(mags.begin(), mags.end());
    Eigen::VectorXd nus(n);
    for (int k = 0; k < n; ++k) nus[k] = mags[static_cast<size_t>(2 * k)];  // pairs +-i nu
    return nus;
}

Eigen::VectorXd CovarianceMatrix::symplectic_eigenvalues() const {
    return symplectic_spectrum(v_);
}

bool CovarianceMatrix::is_physical(double slack) const {
    return symplectic_eigenvalues().minCoeff() >= 0.5 - slack;
}

CovarianceMatrix solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                std::vector<Mode> mode_labels) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n || d.rows() != n || d.cols() != n) {
        throw ValidationError("solve_lyapunov: dimension mismatch");
    }
    const double max_re = max_real_eigenvalue(a);
    if (!(max_re < 0.0)) {
        throw InstabilityError("solve_lyapunov: drift matrix is not strictly stable", max_re);
    }

    // unknowns: upper triangle of V
    const int m = n * (n + 1) / 2;
    const auto idx = [n](int i, int j) {  // i <= j
        return i * n - i * (i - 1) / 2 + (j - i);
    };
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int row = idx(i, j);
            rhs[row] = -d(i, j);
            for (int k = 0; k < n; ++k) {
                // A_ik V_kj term
                sys(row, k <= j ? idx(k, j) : idx(j, k)) += a(i, k);
                // V_ik A_jk term
                sys(row, i <= k ? idx(i, k) : idx(k, i)) += a(j, k);
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    if (!lu.isInvertible()) {
        throw ConvergenceError("solve_lyapunov: singular linear system (degenerate spectrum)",
                               0.0);
    }
    const Eigen::VectorXd x = lu.solve(rhs);
    Eigen::MatrixXd v(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            v(i, j) = v(j, i) = x[idx(i, j)];
        }
    }

    const double resid = (a * v + v * a.transpose() + d).cwiseAbs().maxCoeff();
    const double dscale = std::max(d.cwiseAbs().maxCoeff(), 1e-300);
    if (resid > 1e-10 * dscale) {
        throw ConvergenceError("solve_lyapunov: residual exceeds tolerance", resid / dscale);
    }
    return {v, std::move(mode_labels)};
}

CovarianceMatrix steady_state_cm(const LinearizedModel& m) {
    if (m.mode_count() == 2) {
        const StabilityReport rep = routh_hurwitz_single(m);
        if (!rep.is_stable) {
            throw InstabilityError("steady_state_cm: operating point is unstable "
                                   "(s1 or s2 non-positive)",
                                   rep.max_re_eigenvalue);
        }
    } else {
        const double max_re = max_real_eigenvalue(m.drift);
        if (!(max_re < 0.0)) {
            throw InstabilityError("steady_state_cm: drift matrix is not strictly stable",
                                   max_re);
        }
    }
    return solve_lyapunov(m.drift, m.diffusion_markov_matrix(), m.modes);
}

} // namespace optomech

#include "optomech/stability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "optomech/errors.hpp"

namespace optomech {

double max_real_eigenvalue(const Eigen::MatrixXd& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
    return es.eigenvalues().real().maxCoeff();
}

StabilityReport routh_hurwitz_single(const NormalizedRates& r, double delta,
                                     double coupling) {
    const double g = r.gamma_m, k = r.kappa, D = delta, G = coupling;
    StabilityReport rep;
    rep.s1 = 2.0 * g * k * ((k * k + (1.0 - D) * (1.0 - D)) * (k * k + (1.0 + D) * (1.0 + D))
                            + g * ((g + 2.0 * k) * (k * k + D * D) + 2.0 * k))
           + D * G * G * (g + 2.0 * k) * (g + 2.0 * k);
    rep.s2 = (k * k + D * D) - G * G * D;
    rep.eta = 1.0 - G * G * D / (k * k + D * D);
    rep.max_re_eigenvalue =
        max_real_eigenvalue(build_single_mode_model(r, delta, coupling).drift);
    rep.is_stable = rep.s1 > 0.0 && rep.s2 > 0.0;
    rep.criterion_agreement = rep.is_stable == (rep.max_re_eigenvalue < 0.0);
    return rep;
}

StabilityReport routh_hurwitz_single(const LinearizedModel& m) {
    if (m.mode_count() != 2) {
        throw ValidationError("routh_hurwitz_single: expected a single-mode model");
    }
    NormalizedRates r;
    r.gamma_m = m.gamma_m;
    r.kappa = m.kappa;
    r.n0 = m.n0;
    r.thermal_ratio = m.thermal_ratio;
    return routh_hurwitz_single(r, m.detunings[0], m.couplings[0]);
}

double cold_damping_stability(const NormalizedRates& r, double coupling, double kappa,
                              double g_cd, double omega_fb) {
    const double g = r.gamma_m, k = kappa, G = coupling, wf = omega_fb;
    return (g * k * wf + g_cd * G * wf + (k + wf))
             * ((k + g) * (k + wf) * (g + wf) + g - g_cd * G * wf)
         - k * wf * (k + g + wf) * (k + g + wf);
}

Eigen::VectorXcd cold_damping_poles(const NormalizedRates& r, double coupling,
                                    double kappa, double g_cd, double omega_fb,
                                    double theta) {
    // characteristic quartic in lambda = -i omega:
    // (l^2 + g l + 1)(l + k)(l + wf) + l gcd cos(theta) G wf = 0
    const double g = r.gamma_m, k = kappa, wf = omega_fb;
    const double u = g_cd * std::cos(theta) * coupling * wf;
    // expand (l^2+g l+1)(l^2 + (k+wf) l + k wf)
    Eigen::VectorXd c(5);  // c[i] multiplies l^i
    c[4] = 1.0;
    c[3] = g + k + wf;
    c[2] = k * wf + g * (k + wf) + 1.0;
    c[1] = g * k * wf + (k + wf) + u;
    c[0] = k * wf;
    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 4; ++i) companion(0, i) = -c[3 - i] / c[4];
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
    Eigen::EigenSolver<Eigen::Matrix4d> es(companion, false);
    return es.eigenvalues();
}

namespace {

// characteristic polynomial coefficients via Faddeev-LeVerrier
std::vector<double> char_poly(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        m = a * m + c[k - 1] * Eigen::MatrixXd::Identity(n, n);
        c[k] = -(a * m).trace() / k;
    }
    return c;  // lambda^n + c[1] lambda^{n-1} + ... + c[n]
}

} // namespace

CharPolyCoeffs two_mode_char_poly(const LinearizedModel& m, double rel_tol) {
    if (m.mode_count() != 3 || m.modes[2] != Mode::optical_b) {
        throw ValidationError("two_mode_char_poly: expected a two-optical-mode model");
    }
    const double g = m.gamma_m, k = m.kappa;
    const double da = m.detunings[0], db = m.detunings[1];
    const double ga = m.couplings[0], gb = m.couplings[1];
    const double da2 = da * da, db2 = db * db, k2 = k * k;

    CharPolyCoeffs out;
    out.closed_form[0] = g + 4.0 * k;
    out.closed_form[1] = da2 + db2 + 4.0 * g * k + 6.0 * k2 + 1.0;
    out.closed_form[2] = g * (da2 + db2 + 6.0 * k2) + 2.0 * k * (da2 + db2 + 2.0 * (k2 + 1.0));
    out.closed_form[3] = k2 * k2 + 2.0 * g * k * (db2 + 2.0 * k2) + 6.0 * k2
                       + db2 * (k2 + 1.0) + da2 * (db2 + 2.0 * g * k + k2 + 1.0)
                       - (ga * ga * da + gb * gb * db);
    out.closed_form[4] = g * (da2 + k2) * (db2 + k2) + 2.0 * k * (da2 + db2 + 2.0 * k2)
                       - 2.0 * k * (ga * ga * da + gb * gb * db);
    out.closed_form[5] = (da2 + k2) * (db2 + k2)
                       - (gb * gb * db * (da2 + k2) + ga * ga * da * (db2 + k2));

    const std::vector<double> c = char_poly(m.drift);
    for (int i = 0; i < 6; ++i) out.numeric[i] = c[i + 1];

    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double scale = std::max({1e-30, std::abs(out.closed_form[i]),
                                       std::abs(out.numeric[i])});
        worst = std::max(worst, std::abs(out.closed_form[i] - out.numeric[i]) / scale);
    }
    out.max_rel_mismatch = worst;
    if (worst > rel_tol) {
        throw ConsistencyError("two_mode_char_poly: closed-form and numeric coefficients "
                               "disagree beyond tolerance");
    }
    return out;
}

namespace {

double spectrum_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::EigenSolver<Eigen::MatrixXd> ea(a, false), eb(b, false);
    std::vector<std::complex<double>> la(a.rows()), lb(b.rows());
    for (int i = 0; i < a.rows(); ++i) {
        la[i] = ea.eigenvalues()[i];
        lb[i] = eb.eigenvalues()[i];
    }
    auto key = [](const std::complex<double>& z1, const std::complex<double>& z2) {
        if (z1.real() != z2.real()) return z1.real() < z2.real();
        return z1.imag() < z2.imag();
    };
    std::sort(la.begin(), la.end(), key);
    std::sort(lb.begin(), lb.end(), key);
    double worst = 0.0;
    for (size_t i = 0; i < la.size(); ++i) worst = std::max(worst, std::abs(la[i] - lb[i]));
    return worst;
}

} // namespace

BalanceReport balanced_condition_check(const LinearizedModel& m, double tol) {
    if (m.mode_count() != 3 || m.modes[2] != Mode::optical_b) {
        throw ValidationError("balanced_condition_check: expected a two-optical-mode model");
    }
    BalanceReport rep;
    rep.balanced = std::abs(std::abs(m.couplings[0]) - std::abs(m.couplings[1])) <= tol
                && std::abs(m.detunings[0] + m.detunings[1]) <= tol;
    NormalizedRates r;
    r.gamma_m = m.gamma_m;
    r.kappa = m.kappa;
    r.n0 = m.n0;
    r.thermal_ratio = m.thermal_ratio;
    TwoModePoint decoupled{m.detunings[0], m.detunings[1], 0.0, 0.0};
    rep.eigenvalue_drift =
        spectrum_distance(m.drift, build_two_mode_model(r, decoupled).drift);
    return rep;
}

} // namespace optomech

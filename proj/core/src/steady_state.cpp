#include "optomech/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"
#include "optomech/stability.hpp"

namespace optomech {

namespace {

double cubic_value(double x, double b, double c, double d) {
    return ((x + b) * x + c) * x + d;
}

double newton_polish(double x, double b, double c, double d) {
    for (int i = 0; i < 6; ++i) {
        const double f = cubic_value(x, b, c, d);
        const double fp = (3.0 * x + 2.0 * b) * x + c;
        if (fp == 0.0) break;
        const double step = f / fp;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

CubicRoots solve_cubic_real(double b, double c, double d, double disc_tol) {
    CubicRoots out;
    const double disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c
                      - 4.0 * c * c * c - 27.0 * d * d;
    const double scale = std::max({1.0, std::abs(18.0 * b * c * d),
                                   std::abs(4.0 * b * b * b * d), b * b * c * c,
                                   std::abs(4.0 * c * c * c), 27.0 * d * d});
    // depressed form t^3 + p t + q, x = t - b/3
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;

    if (std::abs(disc) <= disc_tol * scale) {
        out.degenerate = true;
        if (std::abs(p) <= 1e-14 * std::max(1.0, b * b)) {
            out.roots[0] = newton_polish(shift, b, c, d);  // triple root
            out.count = 1;
        } else {
            out.roots[0] = newton_polish(3.0 * q / p + shift, b, c, d);
            out.roots[1] = newton_polish(-1.5 * q / p + shift, b, c, d);  // double root
            std::sort(out.roots.begin(), out.roots.begin() + 2);
            out.count = 2;
        }
        return out;
    }

    if (disc > 0.0) {
        // three distinct real roots, trigonometric form
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            const double t = m * std::cos(phi - 2.0 * M_PI * k / 3.0);
            out.roots[k] = newton_polish(t + shift, b, c, d);
        }
        std::sort(out.roots.begin(), out.roots.end());
        out.count = 3;
        return out;
    }

    // one real root, Cardano
    const double h = q * q / 4.0 + p * p * p / 27.0;  // > 0 here
    const double s = std::sqrt(h);
    const double t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
    out.roots[0] = newton_polish(t + shift, b, c, d);
    out.count = 1;
    return out;
}

std::vector<OperatingPoint> solve_single_mode(const PhysicalParams& p,
                                              const DerivedParams& d) {
    const double w = p.omega_m;
    const double kb = d.kappa / w;
    const double d0 = p.detuning_Delta0 / w;
    const double e = d.E_drive / w;
    const double g0 = d.G0 / w;

    std::vector<OperatingPoint> branches;
    if (d.E_drive == 0.0) {
        OperatingPoint op;
        op.alpha_s = 0.0;
        op.q_s = 0.0;
        op.effective_delta_a = d0;
        op.effective_g_a = 0.0;
        op.stable_hint = true;
        branches.push_back(op);
        return branches;
    }

    // intensity variable I = g0^2 |alpha|^2 (equals the detuning shift):
    // I^3 - 2 d0 I^2 + (kb^2 + d0^2) I - g0^2 e^2 = 0
    const CubicRoots roots = solve_cubic_real(-2.0 * d0, kb * kb + d0 * d0,
                                              -g0 * g0 * e * e);
    int idx = 0;
    for (int k = 0; k < roots.count; ++k) {
        const double shift = roots.roots[k];
        if (shift < -1e-12) continue;
        const double delta = d0 - std::max(shift, 0.0);
        OperatingPoint op;
        op.alpha_s = e / std::complex<double>(kb, delta);
        op.q_s = (d.G0 / w) * std::norm(op.alpha_s);
        op.effective_delta_a = delta;
        op.effective_g_a = g0 * std::sqrt(2.0) * std::abs(op.alpha_s);
        op.branch_index = idx++;
        op.degenerate = roots.degenerate;
        const double lhs = std::norm(op.alpha_s) * (kb * kb + delta * delta);
        op.residual = std::abs(lhs - e * e) / (e * e);
        NormalizedRates nr;
        nr.gamma_m = d.gamma_m / w;
        nr.kappa = kb;
        op.stable_hint = routh_hurwitz_single(nr, delta, op.effective_g_a).is_stable;
        branches.push_back(op);
    }
    return branches;
}

std::vector<OperatingPoint> solve_two_mode(const TwoModeParams& tm) {
    tm.base.validate();
    if (!(tm.drive_power_Pb >= 0.0)) {
        throw ValidationError("TwoModeParams: drive_power_Pb must be non-negative");
    }
    const PhysicalParams& pa = tm.base;
    const DerivedParams da = derive_params(pa);

    PhysicalParams pb = pa;
    pb.wavelength = tm.wavelength_b > 0.0 ? tm.wavelength_b : pa.wavelength;
    pb.drive_power_P = tm.drive_power_Pb;
    pb.detuning_Delta0 = tm.detuning_Delta0b;
    pb.kappa = da.kappa;
    pb.finesse_F.reset();
    const DerivedParams db = derive_params(pb);

    const double w = pa.omega_m;
    const double kb = da.kappa / w;
    const double g0a = da.G0 / w, g0b = db.G0 / w;
    const double ea = da.E_drive / w, eb = db.E_drive / w;
    const double d0a = pa.detuning_Delta0 / w, d0b = tm.detuning_Delta0b / w;

    // fixed point in the common radiation-pressure shift
    // t = g0a^2 |a_s|^2 + g0b^2 |b_s|^2 with Delta_x = Delta0_x - t
    const auto F = [&](double t) {
        const double da_ = d0a - t, db_ = d0b - t;
        return g0a * g0a * ea * ea / (kb * kb + da_ * da_)
             + g0b * g0b * eb * eb / (kb * kb + db_ * db_);
    };

    const double span = 4.0 * (g0a * g0a * ea * ea / (kb * kb)
                               + g0b * g0b * eb * eb / (kb * kb));
    constexpr int n_start = 32;
    constexpr int max_iter = 500;
    constexpr double damping = 0.5;

    std::vector<double> solutions;
    double worst_residual = 0.0;
    bool any_converged = false;
    for (int s = 0; s < n_start; ++s) {
        double t = span * static_cast<double>(s) / (n_start - 1);
        bool ok = false;
        for (int it = 0; it < max_iter; ++it) {
            const double f = F(t);
            const double next = (1.0 - damping) * t + damping * f;
            if (std::abs(next - t) <= 1e-13 * std::max(1.0, std::abs(next))) {
                t = next;
                ok = true;
                break;
            }
            t = next;
        }
        // Newton polish on h(t) = t - F(t)
        for (int it = 0; it < 8; ++it) {
            const double h = t - F(t);
            const double dt = 1e-7 * std::max(1.0, std::abs(t));
            const double hp = ((t + dt - F(t + dt)) - (t - dt - F(t - dt))) / (2.0 * dt);
            if (hp == 0.0) break;
            t -= h / hp;
        }
        const double res = std::abs(t - F(t)) / std::max(1.0, std::abs(t));
        if (ok || res < 1e-11) {
            any_converged = true;
            if (t >= -1e-12) solutions.push_back(std::max(t, 0.0));
        }
        worst_residual = std::max(worst_residual, res);
    }
    if (!any_converged) {
        throw ConvergenceError("solve_two_mode: fixed-point iteration did not converge",
                               worst_residual);
    }

    std::sort(solutions.begin(), solutions.end());
    std::vector<OperatingPoint> branches;
    int idx = 0;
    for (double t : solutions) {
        const double da_ = d0a - t, db_ = d0b - t;
        const std::complex<double> a = ea / std::complex<double>(kb, da_);
        const std::complex<double> bamp = eb / std::complex<double>(kb, db_);
        const double qs = (g0a * std::norm(a) + g0b * std::norm(bamp));
        if (!branches.empty() && std::abs(qs - branches.back().q_s)
                <= 1e-8 * std::max(1.0, std::abs(qs))) {
            continue;  // duplicate branch
        }
        OperatingPoint op;
        op.alpha_s = a;
        op.beta_s = bamp;
        op.q_s = qs;
        op.effective_delta_a = da_;
        op.effective_delta_b = db_;
        op.effective_g_a = g0a * std::sqrt(2.0) * std::abs(a);
        op.effective_g_b = g0b * std::sqrt(2.0) * std::abs(bamp);
        op.branch_index = idx++;
        op.residual = std::abs(t - F(t)) / std::max(1.0, std::abs(t));
        NormalizedRates nr;
        nr.gamma_m = da.gamma_m / w;
        nr.kappa = kb;
        op.stable_hint = max_real_eigenvalue(two_mode_model_at(nr, op).drift) < 0.0;
        branches.push_back(op);
    }
    return branches;
}

LinearizedModel single_mode_model_at(const NormalizedRates& r, const OperatingPoint& op) {
    return build_single_mode_model(r, op.effective_delta_a, op.effective_g_a);
}

LinearizedModel two_mode_model_at(const NormalizedRates& r, const OperatingPoint& op) {
    TwoModePoint pt{op.effective_delta_a, op.effective_delta_b,
                    op.effective_g_a, op.effective_g_b};
    return build_two_mode_model(r, pt);
}

TwoModeParams invert_two_mode_targets(const PhysicalParams& geometry, double delta_a,
                                      double delta_b, double g_a, double g_b) {
    const DerivedParams d = derive_params(geometry);
    const double w = geometry.omega_m;
    const double kb = d.kappa / w;
    const double g0 = d.G0 / w;  // both modes assumed at the same wavelength
    const double amp_a = g_a / (std::sqrt(2.0) * g0);
    const double amp_b = g_b / (std::sqrt(2.0) * g0);
    const double shift = g0 * g0 * (amp_a * amp_a + amp_b * amp_b);
    const double ea = amp_a * std::sqrt(kb * kb + delta_a * delta_a);
    const double eb = amp_b * std::sqrt(kb * kb + delta_b * delta_b);

    TwoModeParams tm;
    tm.base = geometry;
    tm.base.detuning_Delta0 = (delta_a + shift) * w;
    tm.detuning_Delta0b = (delta_b + shift) * w;
    tm.wavelength_b = geometry.wavelength;
    // |E|^2 = 2 P kappa / (hbar omega_l)
    const double el = ea * w, ebl = eb * w;
    tm.base.drive_power_P = el * el * constants::hbar * d.omega_l / (2.0 * d.kappa);
    tm.drive_power_Pb = ebl * ebl * constants::hbar * d.omega_l / (2.0 * d.kappa);
    return tm;
}

WeakCouplingReport atom_weak_coupling_check(double g, double delta_a, double gamma_a,
                                            std::complex<double> alpha_s,
                                            double r1_threshold, double r2_threshold) {
    if (!(delta_a * delta_a + gamma_a * gamma_a > 0.0)) {
        throw ValidationError("atom_weak_coupling_check: delta_a^2 + gamma_a^2 must be positive");
    }
    WeakCouplingReport rep;
    const double i2 = std::norm(alpha_s);
    rep.r1 = g * g * i2 / (delta_a * delta_a + gamma_a * gamma_a);
    rep.r2 = i2 > 0.0 ? 1.0 / i2 : std::numeric_limits<double>::infinity();
    rep.pass = rep.r1 < r1_threshold && rep.r2 < r2_threshold;
    return rep;
}

} // namespace optomech

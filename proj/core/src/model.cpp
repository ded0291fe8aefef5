#include "optomech/model.hpp"

#include <cmath>

#include "optomech/errors.hpp"

namespace optomech {

double brownian_spectrum(double gamma_m, double omega, double thermal_ratio) {
    if (std::isinf(thermal_ratio)) return gamma_m * std::abs(omega);
    const double x = omega * thermal_ratio / 2.0;
    if (std::abs(x) < 1e-8) return gamma_m * 2.0 / thermal_ratio;  // classical limit
    return gamma_m * omega / std::tanh(x);
}

Eigen::VectorXd LinearizedModel::diffusion_exact(double omega) const {
    Eigen::VectorXd d = diffusion_markov;
    d[1] = brownian_spectrum(gamma_m, omega, thermal_ratio);
    return d;
}

std::vector<int> LinearizedModel::optical_columns() const {
    std::vector<int> cols;
    for (int m = 0; m < mode_count(); ++m) {
        if (modes[m] == Mode::optical_a || modes[m] == Mode::optical_b) {
            cols.push_back(2 * m);
        }
    }
    return cols;
}

LinearizedModel build_single_mode_model(const NormalizedRates& r, double delta,
                                        double coupling) {
    LinearizedModel m;
    m.gamma_m = r.gamma_m;
    m.kappa = r.kappa;
    m.n0 = r.n0;
    m.thermal_ratio = r.thermal_ratio;
    m.modes = {Mode::mechanical, Mode::optical_a};
    m.detunings = {delta};
    m.couplings = {coupling};

    const double g = r.gamma_m, k = r.kappa, G = coupling, D = delta;
    m.drift.resize(4, 4);
    m.drift << 0,  1,  0, 0,
              -1, -g,  G, 0,
               0,  0, -k, D,
               G,  0, -D, -k;
    m.diffusion_markov.resize(4);
    m.diffusion_markov << 0, g * (2.0 * r.n0 + 1.0), k, k;
    return m;
}

LinearizedModel build_two_mode_model(const NormalizedRates& r, const TwoModePoint& pt) {
    LinearizedModel m;
    m.gamma_m = r.gamma_m;
    m.kappa = r.kappa;
    m.n0 = r.n0;
    m.thermal_ratio = r.thermal_ratio;
    m.modes = {Mode::mechanical, Mode::optical_a, Mode::optical_b};
    m.detunings = {pt.delta_a, pt.delta_b};
    m.couplings = {pt.g_a, pt.g_b};

    const double g = r.gamma_m, k = r.kappa;
    const double GA = pt.g_a, GB = pt.g_b, DA = pt.delta_a, DB = pt.delta_b;
    // The (dp,dp) entry is -gamma_m: damping, consistent with the 4x4 model.
    m.drift.resize(6, 6);
    m.drift <<  0,  1,   0,   0,   0,   0,
               -1, -g,  GA,   0,  GB,   0,
                0,  0,  -k,  DA,   0,   0,
               GA,  0, -DA,  -k,   0,   0,
                0,  0,   0,   0,  -k,  DB,
               GB,  0,   0,   0, -DB,  -k;
    m.diffusion_markov.resize(6);
    m.diffusion_markov << 0, g * (2.0 * r.n0 + 1.0), k, k, k, k;
    return m;
}

LinearizedModel build_hybrid_model(const NormalizedRates& r, double delta, double coupling,
                                   const AtomParams& atoms) {
    if (!(atoms.gamma_a > 0.0)) {
        throw ValidationError("build_hybrid_model: gamma_a must be positive");
    }
    LinearizedModel m;
    m.gamma_m = r.gamma_m;
    m.kappa = r.kappa;
    m.gamma_a = atoms.gamma_a;
    m.n0 = r.n0;
    m.thermal_ratio = r.thermal_ratio;
    m.modes = {Mode::mechanical, Mode::optical_a, Mode::atomic};
    m.detunings = {delta, atoms.delta_a};
    m.couplings = {coupling, atoms.coupling_ga};

    const double g = r.gamma_m, k = r.kappa, G = coupling, D = delta;
    const double Ga = atoms.coupling_ga, Da = atoms.delta_a, ga = atoms.gamma_a;
    m.drift.resize(6, 6);
    m.drift <<  0,  1,   0,   0,   0,   0,
               -1, -g,   G,   0,   0,   0,
                0,  0,  -k,   D,   0,  Ga,
                G,  0,  -D,  -k, -Ga,   0,
                0,  0,   0,  Ga, -ga,  Da,
                0,  0, -Ga,   0, -Da, -ga;
    m.diffusion_markov.resize(6);
    m.diffusion_markov << 0, g * (2.0 * r.n0 + 1.0), k, k, ga, ga;
    return m;
}

} // namespace optomech

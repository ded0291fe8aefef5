#pragma once

#include <vector>

#include <Eigen/Dense>

#include "optomech/params.hpp"

namespace optomech {

enum class Mode { mechanical, optical_a, optical_b, atomic };

// Drift/diffusion description of the linearized quantum Langevin equations.
//
// Everything is stored in units of omega_m. Quadrature ordering is
// (dq, dp) for the mechanical mode first, then (dX, dY) per optical or
// atomic mode, following the fluctuation vector u(t).
struct LinearizedModel {
    Eigen::MatrixXd drift;             // n x n, n in {4, 6}
    Eigen::VectorXd diffusion_markov;  // diagonal of the Markovian D
    std::vector<Mode> modes;           // mode labels, mechanical first

    double gamma_m = 0.0;
    double kappa = 0.0;
    double gamma_a = 0.0;              // zero unless an atomic mode is present
    double n0 = 0.0;
    double thermal_ratio = 0.0;        // hbar*omega_m/(kB*T0), +inf at T0 = 0

    std::vector<double> detunings;     // effective Delta per optical/atomic mode
    std::vector<double> couplings;     // effective G per optical/atomic mode

    int dim() const { return static_cast<int>(drift.rows()); }
    int mode_count() const { return static_cast<int>(modes.size()); }

    // Frequency-dependent diffusion: the dp entry becomes
    // gamma_m * omega * coth(hbar omega / 2 kB T0) (omega in units of omega_m);
    // all other entries are frequency independent.
    Eigen::VectorXd diffusion_exact(double omega) const;

    Eigen::MatrixXd diffusion_markov_matrix() const {
        return diffusion_markov.asDiagonal();
    }

    // First quadrature column of every optical (cavity) mode.
    std::vector<int> optical_columns() const;
};

// Brownian-noise spectral density entry gamma*x*coth(x*r/2); the r -> inf
// (zero temperature) limit is gamma*|x|.
double brownian_spectrum(double gamma_m, double omega, double thermal_ratio);

// 4x4 single driven cavity mode. delta and coupling in units of omega_m.
LinearizedModel build_single_mode_model(const NormalizedRates& r, double delta,
                                        double coupling);

struct TwoModePoint {
    double delta_a = 0.0;
    double delta_b = 0.0;
    double g_a = 0.0;
    double g_b = 0.0;
};

// 6x6 bichromatically driven cavity, both modes with the same kappa.
LinearizedModel build_two_mode_model(const NormalizedRates& r, const TwoModePoint& pt);

struct AtomParams {
    double coupling_ga = 0.0;  // collective atom-cavity coupling, units of omega_m
    double delta_a = 0.0;      // atomic detuning, units of omega_m
    double gamma_a = 0.0;      // atomic decay, units of omega_m
};

// 6x6 hybrid mirror/cavity/atomic-ensemble system.
LinearizedModel build_hybrid_model(const NormalizedRates& r, double delta, double coupling,
                                   const AtomParams& atoms);

} // namespace optomech

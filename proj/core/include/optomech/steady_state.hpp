#pragma once

#include <array>
#include <complex>
#include <vector>

#include "optomech/model.hpp"
#include "optomech/params.hpp"

namespace optomech {

// One semiclassical fixed point of the nonlinear operating-point equations.
// Detunings and couplings are effective values in units of omega_m;
// q_s is the dimensionless static displacement.
struct OperatingPoint {
    std::complex<double> alpha_s;      // intracavity amplitude, mode A
    std::complex<double> beta_s;       // mode B (two-mode only)
    double q_s = 0.0;
    double effective_delta_a = 0.0;
    double effective_delta_b = 0.0;
    double effective_g_a = 0.0;
    double effective_g_b = 0.0;
    int branch_index = 0;
    bool stable_hint = true;
    bool degenerate = false;
    double residual = 0.0;             // relative fixed-point residual
};

// Real roots of x^3 + b x^2 + c x + d, enumerated in closed form.
// degenerate is set when the discriminant sits within tol of zero, in which
// case the double root is reported once (count 2 for a double+simple pair).
struct CubicRoots {
    std::array<double, 3> roots{};
    int count = 0;
    bool degenerate = false;
};
CubicRoots solve_cubic_real(double b, double c, double d, double disc_tol = 1e-9);

// Branches of the single-mode cubic |alpha_s|^2 (kappa^2 + Delta^2) = |E|^2
// with Delta = Delta0 - G0^2 |alpha_s|^2 / omega_m, sorted by intensity.
std::vector<OperatingPoint> solve_single_mode(const PhysicalParams& p,
                                              const DerivedParams& d);

// Bichromatic driving: mode A's drive/detuning live in base; mode B adds its
// own wavelength, power and bare detuning. Both modes share kappa.
struct TwoModeParams {
    PhysicalParams base;
    double wavelength_b = 0.0;     // m; 0 means same as base
    double drive_power_Pb = 0.0;   // W
    double detuning_Delta0b = 0.0; // rad/s
};

// Damped fixed-point iteration with multistart on the radiation-pressure
// shift, deduplicated to distinct branches sorted by q_s.
std::vector<OperatingPoint> solve_two_mode(const TwoModeParams& p);

// Linearization validity in the hybrid system: r1 = g^2 |alpha_s|^2 /
// (Delta_a^2 + gamma_a^2) (single-atom excitation probability) and
// r2 = 1/|alpha_s|^2 must both be small.
struct WeakCouplingReport {
    double r1 = 0.0;
    double r2 = 0.0;
    bool pass = false;
};
WeakCouplingReport atom_weak_coupling_check(double g, double delta_a, double gamma_a,
                                            std::complex<double> alpha_s,
                                            double r1_threshold = 0.1,
                                            double r2_threshold = 0.1);

// Linearized models at a solved operating point.
LinearizedModel single_mode_model_at(const NormalizedRates& r, const OperatingPoint& op);
LinearizedModel two_mode_model_at(const NormalizedRates& r, const OperatingPoint& op);

// Drives that realize the requested effective detunings/couplings (units of
// omega_m) self-consistently on the given cavity geometry.
TwoModeParams invert_two_mode_targets(const PhysicalParams& geometry, double delta_a,
                                      double delta_b, double g_a, double g_b);

} // namespace optomech

#pragma once

#include <complex>
#include <optional>

namespace optomech {

// SI-level description of a driven optomechanical cavity experiment.
// Exactly one of {finesse_F, kappa} must be set; kappa is derived from the
// finesse as kappa = pi*c/(L*F) when absent.
struct PhysicalParams {
    double omega_m = 0.0;          // mechanical angular frequency, rad/s
    double quality_Q = 0.0;        // mechanical quality factor
    double mass = 0.0;             // effective mass, kg
    double cavity_length_L = 0.0;  // effective cavity length, m
    double wavelength = 0.0;       // cavity/laser wavelength, m
    double bath_temp_T0 = 0.0;     // reservoir temperature, K
    std::optional<double> finesse_F;
    std::optional<double> kappa;   // cavity amplitude decay rate, rad/s
    double drive_power_P = 0.0;    // input laser power, W
    double detuning_Delta0 = 0.0;  // bare detuning omega_c - omega_l, rad/s

    void validate() const;  // throws ValidationError naming the bad field
};

// The reference experiment used throughout: omega_m = 2pi x 10 MHz, Q = 1e5,
// m = 30 ng, L = 0.5 mm, lambda = 1064 nm, T0 = 0.6 K, finesse 8e4.
PhysicalParams default_experiment();

// Rates derived from PhysicalParams, all in rad/s except n0.
struct DerivedParams {
    double gamma_m = 0.0;   // mechanical damping omega_m/Q
    double G0 = 0.0;        // bare optomechanical coupling
    double E_drive = 0.0;   // driving rate |E|
    double n0 = 0.0;        // mean thermal phonon occupancy
    double kappa = 0.0;     // cavity amplitude decay
    double omega_c = 0.0;   // cavity angular frequency
    double omega_l = 0.0;   // laser angular frequency
};

DerivedParams derive_params(const PhysicalParams& p);

// Bose occupancy 1/(exp(hbar w/kB T)-1); zero at T = 0.
double thermal_occupancy(double omega, double temperature);

// G = G0 |alpha_s| sqrt(2), rad/s.
double effective_coupling(const DerivedParams& d, std::complex<double> alpha_s);

// Closed form of the same coupling in terms of drive power and the effective
// detuning: G = (2 w_c/L) sqrt(P kappa / (m w_m w_l (kappa^2 + Delta^2))).
double effective_coupling_from_power(const PhysicalParams& p, const DerivedParams& d,
                                     double delta_eff);

// Dimensionless rates of the linearized model, everything in units of omega_m.
// thermal_ratio = hbar*omega_m/(kB*T0); +inf at T0 = 0.
struct NormalizedRates {
    double gamma_m = 0.0;
    double kappa = 0.0;
    double n0 = 0.0;
    double thermal_ratio = 0.0;
};

NormalizedRates normalize(const PhysicalParams& p, const DerivedParams& d);
NormalizedRates normalize(const PhysicalParams& p);

} // namespace optomech

#include "optomech/params.hpp"

#include <cmath>
#include <limits>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(std::string("PhysicalParams: ") + field + " must be positive");
    }
}

} // namespace

void PhysicalParams::validate() const {
    require_positive(omega_m, "omega_m");
    require_positive(quality_Q, "quality_Q");
    require_positive(mass, "mass");
    require_positive(cavity_length_L, "cavity_length_L");
    require_positive(wavelength, "wavelength");
    if (!(bath_temp_T0 >= 0.0) || !std::isfinite(bath_temp_T0)) {
        throw ValidationError("PhysicalParams: bath_temp_T0 must be non-negative");
    }
    if (!(drive_power_P >= 0.0) || !std::isfinite(drive_power_P)) {
        throw ValidationError("PhysicalParams: drive_power_P must be non-negative");
    }
    if (finesse_F.has_value() == kappa.has_value()) {
        throw ValidationError("PhysicalParams: exactly one of finesse_F, kappa must be set");
    }
    if (finesse_F) require_positive(*finesse_F, "finesse_F");
    if (kappa) require_positive(*kappa, "kappa");
    if (!std::isfinite(detuning_Delta0)) {
        throw ValidationError("PhysicalParams: detuning_Delta0 must be finite");
    }
}

PhysicalParams default_experiment() {
    PhysicalParams p;
    p.omega_m = 2.0 * M_PI * 10e6;
    p.quality_Q = 1e5;
    p.mass = 30e-12;
    p.cavity_length_L = 0.5e-3;
    p.wavelength = 1064e-9;
    p.bath_temp_T0 = 0.6;
    p.finesse_F = 8e4;
    return p;
}

double thermal_occupancy(double omega, double temperature) {
    if (temperature <= 0.0) return 0.0;
    const double x = constants::hbar * omega / (constants::k_boltzmann * temperature);
    return 1.0 / std::expm1(x);
}

DerivedParams derive_params(const PhysicalParams& p) {
    p.validate();
    DerivedParams d;
    d.gamma_m = p.omega_m / p.quality_Q;
    d.omega_c = 2.0 * M_PI * constants::c_light / p.wavelength;
    d.omega_l = d.omega_c - p.detuning_Delta0;
    d.kappa = p.kappa ? *p.kappa
                      : M_PI * constants::c_light / (p.cavity_length_L * *p.finesse_F);
    d.G0 = (d.omega_c / p.cavity_length_L) * std::sqrt(constants::hbar / (p.mass * p.omega_m));
    d.E_drive = std::sqrt(2.0 * p.drive_power_P * d.kappa / (constants::hbar * d.omega_l));
    d.n0 = thermal_occupancy(p.omega_m, p.bath_temp_T0);
    return d;
}

double effective_coupling(const DerivedParams& d, std::complex<double> alpha_s) {
    return d.G0 * std::abs(alpha_s) * std::sqrt(2.0);
}

double effective_coupling_from_power(const PhysicalParams& p, const DerivedParams& d,
                                     double delta_eff) {
    return 2.0 * d.omega_c / p.cavity_length_L
         * std::sqrt(p.drive_power_P * d.kappa
                     / (p.mass * p.omega_m * d.omega_l
                        * (d.kappa * d.kappa + delta_eff * delta_eff)));
}

NormalizedRates normalize(const PhysicalParams& p, const DerivedParams& d) {
    NormalizedRates r;
    r.gamma_m = d.gamma_m / p.omega_m;
    r.kappa = d.kappa / p.omega_m;
    r.n0 = d.n0;
    r.thermal_ratio = p.bath_temp_T0 > 0.0
        ? constants::hbar * p.omega_m / (constants::k_boltzmann * p.bath_temp_T0)
        : std::numeric_limits<double>::infinity();
    return r;
}

NormalizedRates normalize(const PhysicalParams& p) {
    return normalize(p, derive_params(p));
}

} // namespace optomech

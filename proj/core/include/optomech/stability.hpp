#pragma once

#include <array>

#include <Eigen/Dense>

#include "optomech/model.hpp"
#include "optomech/params.hpp"

namespace optomech {

// Routh-Hurwitz conditions of the single-mode system together with the
// eigenvalue ground truth. All quantities in units of omega_m.
struct StabilityReport {
    double s1 = 0.0;
    double s2 = 0.0;
    double eta = 0.0;                  // 1 - G^2 Delta / (kappa^2 + Delta^2)
    double max_re_eigenvalue = 0.0;
    bool is_stable = false;            // s1 > 0 and s2 > 0 (closed instability set)
    bool criterion_agreement = false;  // RH verdict equals eigenvalue verdict
};

StabilityReport routh_hurwitz_single(const NormalizedRates& r, double delta,
                                     double coupling);
StabilityReport routh_hurwitz_single(const LinearizedModel& m);

double max_real_eigenvalue(const Eigen::MatrixXd& a);

// Cold damping at Delta = 0: the single non-trivial Routh-Hurwitz condition;
// positive means stable. Inputs in units of omega_m.
double cold_damping_stability(const NormalizedRates& r, double coupling, double kappa,
                              double g_cd, double omega_fb);

// Poles of the feedback-modified susceptibility (in the lambda = -i omega
// plane); stability means all real parts negative.
Eigen::VectorXcd cold_damping_poles(const NormalizedRates& r, double coupling,
                                    double kappa, double g_cd, double omega_fb,
                                    double theta = 0.0);

// Coefficients c1..c6 of the two-mode characteristic polynomial, from the
// closed forms and recomputed from the drift matrix; they must agree to
// rel_tol or an internal-consistency error is thrown.
struct CharPolyCoeffs {
    std::array<double, 6> closed_form{};
    std::array<double, 6> numeric{};
    double max_rel_mismatch = 0.0;
};
CharPolyCoeffs two_mode_char_poly(const LinearizedModel& m, double rel_tol = 1e-9);

// Whether |G_A| = |G_B| and Delta_A = -Delta_B within tol, plus the maximal
// eigenvalue displacement relative to the uncoupled (G = 0) spectrum.
struct BalanceReport {
    bool balanced = false;
    double eigenvalue_drift = 0.0;
};
BalanceReport balanced_condition_check(const LinearizedModel& m, double tol = 1e-12);

} // namespace optomech

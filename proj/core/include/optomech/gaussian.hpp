#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "optomech/lyapunov.hpp"

namespace optomech {

// 2x2 blocks of a two-mode covariance matrix [[V1, Vc], [Vc^T, V2]].
struct BipartiteBlocks {
    Eigen::Matrix2d v1;
    Eigen::Matrix2d v2;
    Eigen::Matrix2d vc;

    static BipartiteBlocks from(const CovarianceMatrix& cm, int mode_i, int mode_j);
    Eigen::Matrix4d assemble() const;
};

// Mechanical occupancy n = (V_qq + V_pp - 1)/2 and the equipartition ratio
// V_qq/V_pp.
struct OccupancyResult {
    double n = 0.0;
    double equipartition_ratio = 0.0;
};
OccupancyResult occupancy(const CovarianceMatrix& cm, int mechanical_mode_index = 0);

// E_N = max(0, -ln 2 eta^-) with eta^- from Sigma = det V1 + det V2 - 2 det Vc.
double log_negativity(const BipartiteBlocks& blocks);
double log_negativity(const CovarianceMatrix& cm, int mode_i, int mode_j);

// 4 det V < Sigma(V) - 1/4; equivalent to E_N > 0.
bool simon_criterion(const BipartiteBlocks& blocks);

// PPT test over the three 1-vs-2 bipartitions of a three-mode state.
struct TripartiteReport {
    std::array<double, 3> min_symplectic{};  // of the partial transposes
    std::array<bool, 3> npt{};
    int npt_count = 0;
    std::string label;
};
TripartiteReport tripartite_class(const CovarianceMatrix& cm);

// Overlap fidelity of two zero-mean single-mode Gaussian states.
double swap_fidelity(const Eigen::Matrix2d& v1, const Eigen::Matrix2d& v2);

// ln[(1 + G/sqrt(2 kappa gamma_m)) / (1 + n0)]; may be negative, callers clamp.
double en_upper_bound(double coupling, double kappa, double gamma_m, double n0);

} // namespace optomech

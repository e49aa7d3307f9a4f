#pragma once

// Finite generalized Dirichlet series (arbitrary positive frequencies),
// the shifted-zeta family g_k, and two desk-scale inverse problems:
// recovering shift coefficients from samples on the real axis, and
// estimating the smallest support frequency from exponential decay.

#include "zetacomb/specfun.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace zetacomb {

struct DirichletTerm {
    double frequency;    // > 0
    Complex coefficient; // nonzero once stored
};

struct GeneralizedDirichletSeries {
    std::vector<DirichletTerm> terms; // strictly increasing frequencies
};

// Sorts, merges duplicate frequencies, drops zero coefficients.
// Throws DomainError for non-positive or non-finite frequencies.
GeneralizedDirichletSeries make_series(std::vector<DirichletTerm> terms);

// sum a_n x_n^{-s} over the stored terms
Complex eval_truncated(const GeneralizedDirichletSeries& series, Complex s);

// The same value through s * integral of the counting step function
// C(x) x^{-s-1}; each constant piece integrates in closed form and the
// telescoped total matches eval_truncated to rounding. Needs Re s > 0
// unless the coefficients sum to zero (then C vanishes eventually and
// the tail integral is empty).
Complex mellin_step_integral(const GeneralizedDirichletSeries& series,
                             Complex s);

// Finite combination sum_k c_k zeta(s - 2k)
struct ZetaShiftCombination {
    std::map<int, Complex> coefficients;
};

// g_k(s) = s(s+1)...(s+2k-1) / (-4 pi^2)^k * zeta(s+2k)        for k >= 0
// g_k(s) = (-4 pi^2)^{-k} / ((s+2k)(s+2k+1)...(s-1)) * zeta(s+2k) for k < 0
// These are the duals of the shifts: g_k(s) = chi(s) zeta((1-s)-2k).
// Throws PoleProximity when s+2k is near 1 or, for k < 0, a denominator
// factor is within 1e-8 of zero.
Complex zeta_shift_g(int k, Complex s);

Complex combo_f(const ZetaShiftCombination& combo, Complex s);
Complex combo_g(const ZetaShiftCombination& combo, Complex s);

struct RecoveryResult {
    ZetaShiftCombination combination;
    double residual;         // Euclidean norm of the fit residual
    double condition_number; // of the column-scaled design matrix
};

// Least-squares fit of samples (sigma_i, g(sigma_i)) in the basis
// {g_k : k_min <= k <= k_max}. Needs at least as many samples as basis
// elements, at distinct sigma >= 5. Columns are scaled by geometric
// means before the SVD solve; IllConditioned above condition 1e12,
// ResidualTooLarge above 1e-6 * |samples|. Coefficients below
// 1e-11 * max(1, largest) are dropped.
RecoveryResult recover_shift_coefficients(
    const std::vector<std::pair<double, Complex>>& samples, int k_min,
    int k_max);

// Estimate of the smallest support frequency of the dual series from the
// decay of g on the real axis: exp(-m) with m the median of the last
// three slopes of log|g|. Needs >= 4 increasing sigmas with max >= 60.
// Throws SignalTooSmall if |g| underflows.
double estimate_support_gap(const std::function<Complex(double)>& g,
                            const std::vector<double>& sigma);

} // namespace zetacomb

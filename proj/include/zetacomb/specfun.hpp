#pragma once

#include <complex>
#include <vector>

#include "zetacomb/errors.hpp"

namespace zetacomb {

using Complex = std::complex<double>;

// ---- Bernoulli numbers and polynomials ------------------------------------

// B_0 .. B_40 (odd indices > 1 are zero). Even entries come from
// B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}, which is stable in
// double precision, unlike the ascending defining recurrence.
const std::vector<double>& bernoulli_numbers();
double bernoulli_number(int n);

// B_n({x}): the 1-periodic extension of the degree-n Bernoulli polynomial.
// 0 <= n <= 40.
double bernoulli_periodic(int n, double x);

// ---- log Gamma and the chi factor -----------------------------------------

// Principal branch of log Gamma(z), continuous on the plane cut along the
// negative real axis. Stirling series once Re z >= 20, downward recursion
// below. Throws PoleProximity within 1e-8 of a nonpositive integer.
Complex log_gamma(Complex z);

// chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), the gamma-factor quotient
// of the even functional equation zeta(s) = chi(s) zeta(1-s).
//
// chi vanishes at s in {0, -2, -4, ...} where the log form degenerates;
// there the value is an exact 0 and exact_zero is set. Poles at
// s in {1, 3, 5, ...} throw PoleProximity.
struct ChiValue {
    Complex value;
    bool exact_zero;
};
ChiValue chi_full(Complex s);
Complex chi(Complex s);

// ---- zeta family -----------------------------------------------------------

// Optional explicit Euler-Maclaurin parameters. Zero means automatic: the
// direct-term count M and correction count K are chosen from s, including a
// reduced-M regime for Re s < 0 where large partial sums would otherwise
// drown the answer in rounding noise. See the implementation notes.
struct EulerMaclaurinParams {
    int direct_terms = 0; // M
    int corrections = 0;  // K
};

// Riemann zeta by Euler-Maclaurin continuation. Guard radius 1e-8 at s = 1.
Complex riemann_zeta(Complex s);
Complex riemann_zeta(Complex s, const EulerMaclaurinParams& params);

// Hurwitz zeta(s, a) = sum_{m>=0} (m+a)^{-s}, 0 < a <= 1.
Complex hurwitz_zeta(Complex s, double a);
Complex hurwitz_zeta(Complex s, double a, const EulerMaclaurinParams& params);

// F(e, s) = sum_{n>=1} exp(2 pi i e n) n^{-s}, e in (0, 1], continued to the
// plane. e = 1 reduces to zeta. For e < 1 the function is entire; evaluation
// uses iterated summation by parts for Re s >= 1/2 and the two-Hurwitz-zeta
// inversion at 1-s below.
Complex periodic_zeta(double e, Complex s);

// Z(d, e, s) = sum_{m>=0} exp(2 pi i e (d+m)) (d+m)^{-s}, d, e in (0, 1].
// Note the twist phase is evaluated at the sample points d+m, not at m.
// e = 1 reduces to exp(2 pi i d) zeta(s, d).
Complex lerch_sum(double d, double e, Complex s);

// theta(t) = sum_{n in Z} exp(-pi n^2 t), t > 0; terms summed until < 1e-17.
double theta(double t);

} // namespace zetacomb

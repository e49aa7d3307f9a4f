#pragma once

// Even atomic measures supported on unit-step arithmetic progressions.
// Windowed expansion of T_{d,e} combinations into explicit atoms, the
// inverse recovery of the combination by per-progression Prony solves,
// the symbolic Fourier transform, and a Gaussian pairing check that
// exercises the Fourier rotation without touching analytic continuation.

#include "zetacomb/tde.hpp"

#include <vector>

namespace zetacomb {

// Point mass at +position together with its implicit mirror at -position;
// the stored coefficient is shared by both sides.
struct Atom {
    double position;
    Complex coefficient;
};

// atoms sorted by strictly increasing position > 0. A Dirac at the origin
// is kept apart from the list because the Mellin transform forgets it.
struct AtomicEvenMeasure {
    std::vector<Atom> atoms;
    Complex origin_coefficient{0.0, 0.0};
};

struct TdeTerm {
    TdeParams params; // canonical
    Complex coefficient;
};

struct TdeDecomposition {
    std::vector<TdeTerm> terms;
};

// Residue classes in (0, 1] occupied by a measure's support mod 1.
struct ProgressionSupport {
    std::vector<double> residues;
};

// All atoms of sum c * T_{d,e} with position in (0, window], merged at
// 1e-9 position tolerance; integer-d terms leave their share on the
// origin coefficient. Requires window >= 1.
AtomicEvenMeasure expand_window(const TdeDecomposition& dec, double window);

// Clusters positions mod 1 (tolerance 1e-9, fold through frac_pos).
// Throws TooManyClasses beyond 16 classes.
ProgressionSupport detect_progressions(const AtomicEvenMeasure& m);

// Inverse of expand_window: per residue class, the coefficients along
// d + p form a finite sum of unit-circle exponentials; the minimal
// annihilating recurrence is read off a Hankel matrix rank test, its
// roots give the twists e, and a Vandermonde solve gives amplitudes
// which mirror-pair into canonical T_{d,e} terms. Validated by an
// expand_window round trip at 1e-8. Throws InsufficientWindow when a
// class has too few samples for its rank, NotFiniteCombination when a
// root leaves the unit circle by more than 1e-6 or the round trip fails.
TdeDecomposition decompose_prony(const AtomicEvenMeasure& m, double window);

// Term-by-term F(T_{d,e}) = T_{-e,d}, reduction phases folded into the
// coefficients; duplicate canonical pairs merge.
TdeDecomposition fourier_measure(const TdeDecomposition& dec);

// |<D, psi_hat_t> - <F(D), psi_t>| for psi_t(x) = e^{-pi t x^2}, both
// sides summed over expand_window atoms (origin included). Zero up to
// roundoff when the Fourier map is right; the lattice case is the theta
// modular identity. Requires t > 0 and a window with both Gaussian
// tails below 1e-16.
double gaussian_pairing_check(const TdeDecomposition& dec, double t, double window);

// sum a_j x_j^{-s} over the positive atoms; the origin contributes
// nothing.
Complex mellin_of_measure(const AtomicEvenMeasure& m, Complex s);

} // namespace zetacomb

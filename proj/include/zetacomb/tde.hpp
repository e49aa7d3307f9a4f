#pragma once

// Two-parameter family of even twisted combs T_{d,e} and their Mellin
// transforms. Parameters live on the torus mod 1 together with the sign
// flip (d,e) -> (-d,-e); reduction to a canonical fundamental domain
// tracks the accumulated unit phase.

#include "zetacomb/specfun.hpp"

#include <optional>

namespace zetacomb {

struct TdeParams {
    double d;
    double e;
};

// T_{d,e} = phase * T_{params}
struct PhasedTde {
    TdeParams params;
    Complex phase;
};

// Representative of x mod 1 in (0, 1]; values within 1e-9 of an integer
// snap to 1 exactly.
double frac_pos(double x);

// Canonical domain: 0 < d,e <= 1 and d+e <= 1, keeping d >= 1/2 on the
// line d+e = 1; the edges d = 1 and e = 1 keep the half with the other
// coordinate <= 1/2, and (1,1) is canonical. Boundary comparisons use a
// 1e-12 tolerance.
bool is_canonical(double d, double e);

// Reduce arbitrary (d, e) to the canonical representative, phase included.
// Idempotent on canonical inputs.
PhasedTde reduce_params(double d, double e);

// Fourier transform acts by F(T_{d,e}) = T_{-e,d}; returns the reduced form.
// Applying it twice returns the original canonical params with phase 1.
PhasedTde fourier_map(double d, double e);

// Mellin transform of T_{d,e}:
//   f(s) = 1/2 e^{-pi i d e} [ sum_{x = d mod 1, x>0} e^{2 pi i e x} x^{-s}
//                            + sum_{x = -d mod 1, x>0} e^{-2 pi i e x} x^{-s} ]
// continued to the plane. Throws PoleProximity near s = 1 when the twist
// is integral (the only pole the family has).
Complex tde_f(double d, double e, Complex s);

// Mellin transform of F(T_{d,e}); equals chi(s) * tde_f(d, e, 1-s).
Complex tde_g(double d, double e, Complex s);

// Residues of the completed transform pi^{-s/2} Gamma(s/2) f(s), which is
// entire except for at most simple poles at 0 and 1, present only when d
// or e is integral. Closed forms are cross-checked by contour integration
// unless near_degenerate is set (a parameter within (1e-9, 1e-4) of an
// integer, where the pole structure is about to flip).
struct CompletedResidues {
    std::optional<Complex> pole_at_0;
    std::optional<Complex> pole_at_1;
    bool near_degenerate = false;
};
CompletedResidues completed_residues(double d, double e);

} // namespace zetacomb

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetacomb/tde.hpp"
#include "zetacomb/errors.hpp"
#include "zetacomb/rng.hpp"
#include "oracle_values.hpp"

#include <cmath>
#include <complex>

using zetacomb::Complex;
using namespace zetacomb;

namespace {
const double kPi = 3.14159265358979323846;

double abs_err(Complex a, Complex b) { return std::abs(a - b); }
double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}
}

TEST_CASE("frac_pos folds into the half-open-above interval") {
    CHECK(frac_pos(0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(frac_pos(-0.3) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(frac_pos(2.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(frac_pos(0.0) == 1.0);
    CHECK(frac_pos(1.0) == 1.0);
    CHECK(frac_pos(-2.0) == 1.0);
    CHECK(frac_pos(1.0 + 1e-12) == 1.0);
    CHECK(frac_pos(1.0 - 1e-12) == 1.0);
}

TEST_CASE("canonical domain membership") {
    CHECK(is_canonical(0.3, 0.2));
    CHECK(is_canonical(0.5, 0.5));
    CHECK(is_canonical(0.75, 0.25));
    CHECK_FALSE(is_canonical(0.25, 0.75));
    CHECK_FALSE(is_canonical(0.8, 0.3));
    CHECK_FALSE(is_canonical(0.3, 0.7)); // boundary, wrong half
    CHECK(is_canonical(0.7, 0.3));
    CHECK(is_canonical(1.0, 0.3));
    CHECK_FALSE(is_canonical(1.0, 0.7));
    CHECK(is_canonical(0.3, 1.0));
    CHECK_FALSE(is_canonical(0.7, 1.0));
    CHECK(is_canonical(1.0, 1.0));
    CHECK_FALSE(is_canonical(1.2, 0.3));
    CHECK_FALSE(is_canonical(0.3, -0.1));
    CHECK_FALSE(is_canonical(0.0, 0.3));
}

TEST_CASE("reduce_params on the worked examples") {
    PhasedTde r = reduce_params(0.3, 0.2);
    CHECK(r.params.d == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(r.params.e == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(abs_err(r.phase, 1.0) < 1e-14);

    r = reduce_params(1.3, 0.2);
    CHECK(r.params.d == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(r.params.e == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(abs_err(r.phase, std::polar(1.0, -0.2 * kPi)) < 1e-14);

    r = reduce_params(-0.3, -0.2);
    CHECK(r.params.d == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(r.params.e == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(abs_err(r.phase, 1.0) < 1e-14);
}

TEST_CASE("reduce_params lands in the canonical domain") {
    SplitMix64 rng(21);
    for (int i = 0; i < 200; ++i) {
        double d = rng.uniform() * 10.0 - 5.0;
        double e = rng.uniform() * 10.0 - 5.0;
        PhasedTde r = reduce_params(d, e);
        CAPTURE(d);
        CAPTURE(e);
        CHECK(is_canonical(r.params.d, r.params.e));
        CHECK(std::abs(std::abs(r.phase) - 1.0) < 1e-12);
        // idempotence
        PhasedTde again = reduce_params(r.params.d, r.params.e);
        CHECK(again.params.d == r.params.d);
        CHECK(again.params.e == r.params.e);
        CHECK(abs_err(again.phase, 1.0) < 1e-12);
    }
}

TEST_CASE("fourier_map worked example") {
    PhasedTde r = fourier_map(0.3, 0.2);
    CHECK(r.params.d == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.params.e == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(abs_err(r.phase, std::polar(1.0, -0.2 * kPi)) < 1e-13);

    r = fourier_map(1.0, 1.0);
    CHECK(r.params.d == 1.0);
    CHECK(r.params.e == 1.0);
    CHECK(abs_err(r.phase, 1.0) < 1e-13);
}

TEST_CASE("fourier_map is an involution with unit total phase") {
    SplitMix64 rng(22);
    for (int i = 0; i < 100; ++i) {
        double d = rng.uniform() * 6.0 - 3.0;
        double e = rng.uniform() * 6.0 - 3.0;
        PhasedTde base = reduce_params(d, e);
        PhasedTde once = fourier_map(base.params.d, base.params.e);
        PhasedTde twice = fourier_map(once.params.d, once.params.e);
        CAPTURE(d);
        CAPTURE(e);
        CHECK(twice.params.d == doctest::Approx(base.params.d).epsilon(1e-12));
        CHECK(twice.params.e == doctest::Approx(base.params.e).epsilon(1e-12));
        CHECK(abs_err(once.phase * twice.phase, 1.0) < 1e-12);
    }
}

TEST_CASE("mellin transform closed-form points") {
    CHECK(abs_err(tde_f(1.0, 1.0, Complex{2, 0}), Complex{-kPi * kPi / 6, 0})
          < 1e-12);
    CHECK(abs_err(tde_f(0.5, 1.0, Complex{2, 0}), Complex{0, kPi * kPi / 2})
          < 1e-12);
    // the comb at (1/2, 1/2) is identically zero and the two-term formula
    // cancels exactly
    CHECK(abs_err(tde_f(0.5, 0.5, Complex{3, 0}), 0.0) < 1e-15);
    CHECK(abs_err(tde_f(0.5, 0.5, Complex{-1.2, 2.0}), 0.0) < 1e-15);
}

TEST_CASE("mellin transform frozen oracle points") {
    CHECK(rel_err(tde_f(0.5, 0.25, Complex{3, 0}), oracle::kTdeF_half_quarter_3) < 1e-12);
    CHECK(rel_err(tde_f(0.3, 0.2, Complex{2.5, 0}), oracle::kTdeF_0p3_0p2_2p5) < 1e-11);
    CHECK(rel_err(tde_f(0.25, 0.5, Complex{1.5, 0}), oracle::kTdeF_0p25_0p5_1p5) < 1e-11);
    // continued value left of the strip
    CHECK(rel_err(tde_f(0.3, 0.2, Complex{-1, 0}), oracle::kTdeF_0p3_0p2_M1) < 1e-10);
    CHECK(rel_err(tde_g(0.3, 0.2, Complex{3, 0}), oracle::kTdeG_0p3_0p2_3) < 1e-11);
    CHECK(rel_err(tde_g(0.5, 0.25, Complex{-0.5, 0}), oracle::kTdeG_half_quarter_M0p5) < 1e-10);
}

TEST_CASE("the family degenerates to zeta on the integer lattice") {
    SplitMix64 rng(23);
    for (int i = 0; i < 10; ++i) {
        Complex s{rng.uniform() * 4.0 + 1.5, rng.uniform() * 10.0 - 5.0};
        CHECK(rel_err(tde_f(1.0, 1.0, s), -riemann_zeta(s)) < 1e-10);
    }
    CHECK(abs_err(tde_g(1.0, 1.0, Complex{3, 0}),
                  Complex{-1.2020569031595942854, 0}) < 1e-12);
}

TEST_CASE("phase relation carries through the transform") {
    Complex s{2.5, 1.0};
    CHECK(abs_err(tde_f(1.3, 0.2, s),
                  std::polar(1.0, -0.2 * kPi) * tde_f(0.3, 0.2, s)) < 1e-12);
    CHECK(abs_err(tde_f(-0.3, -0.2, s), tde_f(0.3, 0.2, s)) < 1e-15);
    CHECK(abs_err(tde_f(0.3, 1.2, s),
                  std::polar(1.0, 0.3 * kPi) * tde_f(0.3, 0.2, s)) < 1e-12);
}

TEST_CASE("functional equation on the independent continuation line") {
    // twist 1 makes both sides pure Hurwitz machinery
    SplitMix64 rng(24);
    for (double d : {0.2, 0.5, 0.8}) {
        for (int i = 0; i < 8; ++i) {
            Complex s{rng.uniform() * 4.0 + 2.0, rng.uniform() * 20.0 - 10.0};
            Complex lhs = tde_g(d, 1.0, s);
            Complex rhs = chi(s) * tde_f(d, 1.0, 1.0 - s);
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            CAPTURE(d);
            CAPTURE(s);
            CHECK(std::abs(lhs - rhs) / scale < 1e-7);
        }
    }
}

TEST_CASE("functional equation at generic parameters") {
    SplitMix64 rng(25);
    for (int i = 0; i < 12; ++i) {
        double d = 0.05 + 0.9 * rng.uniform();
        double e = 0.05 + 0.9 * rng.uniform();
        Complex lhs = tde_g(d, e, Complex{2, 0});
        Complex rhs = chi(Complex{2, 0}) * tde_f(d, e, Complex{-1, 0});
        CAPTURE(d);
        CAPTURE(e);
        CHECK(abs_err(lhs, rhs) / std::max(1.0, std::abs(rhs)) < 1e-6);
    }
}

TEST_CASE("completed transform has no poles off the integer lines") {
    CompletedResidues r = completed_residues(0.3, 0.7);
    CHECK_FALSE(r.pole_at_0.has_value());
    CHECK_FALSE(r.pole_at_1.has_value());
    CHECK_FALSE(r.near_degenerate);
}

TEST_CASE("completed transform residues on the integer lines") {
    CompletedResidues r = completed_residues(1.0, 0.25);
    REQUIRE(r.pole_at_0.has_value());
    CHECK_FALSE(r.pole_at_1.has_value());
    CHECK(abs_err(*r.pole_at_0, -std::polar(1.0, -kPi / 4)) < 1e-12);

    r = completed_residues(0.25, 1.0);
    CHECK_FALSE(r.pole_at_0.has_value());
    REQUIRE(r.pole_at_1.has_value());
    CHECK(abs_err(*r.pole_at_1, std::polar(1.0, kPi / 4)) < 1e-12);

    r = completed_residues(1.0, 1.0);
    REQUIRE(r.pole_at_0.has_value());
    REQUIRE(r.pole_at_1.has_value());
    CHECK(abs_err(*r.pole_at_0, Complex{1, 0}) < 1e-12);
    CHECK(abs_err(*r.pole_at_1, Complex{-1, 0}) < 1e-12);

    r = completed_residues(2.0, 1.0);
    CHECK(abs_err(*r.pole_at_0, Complex{-1, 0}) < 1e-12);
    CHECK(abs_err(*r.pole_at_1, Complex{1, 0}) < 1e-12);
}

TEST_CASE("near-integral parameters are flagged, not mis-dispatched") {
    CompletedResidues r = completed_residues(1.0 + 1e-6, 0.25);
    CHECK(r.near_degenerate);
    CHECK_FALSE(r.pole_at_0.has_value()); // formally entire

    r = completed_residues(1.0 + 1e-10, 0.25);
    CHECK_FALSE(r.near_degenerate);
    CHECK(r.pole_at_0.has_value()); // inside the integrality snap
}

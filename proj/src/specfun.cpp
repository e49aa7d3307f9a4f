#include "zetacomb/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace zetacomb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kPoleGuard = 1e-8;
constexpr double kEps = 2.2e-16;

// Kahan-compensated complex accumulator. The Euler-Maclaurin sums for
// Re s < 0 cancel ten orders of magnitude; plain accumulation wastes the
// digits the reduced-M policy is trying to save.
struct Accumulator {
    Complex total{0.0, 0.0};
    Complex comp{0.0, 0.0};
    void add(Complex x) {
        const Complex y = x - comp;
        const Complex t = total + y;
        comp = (t - total) - y;
        total = t;
    }
};

// zeta(2k) for the Bernoulli tables: direct sum plus a short tail expansion
// whose own coefficients (1/12, -1/720) are the exact B_2/2! and B_4/4!.
double zeta_even_integer(int twok) {
    const int n0 = 120;
    double sum = 0.0;
    for (int n = n0 - 1; n >= 1; --n)
        sum += std::pow(static_cast<double>(n), -twok);
    const double q = n0;
    const double s = twok;
    sum += std::pow(q, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(q, -s);
    sum += (1.0 / 12.0) * s * std::pow(q, -s - 1.0);
    sum -= (1.0 / 720.0) * s * (s + 1.0) * (s + 2.0) * std::pow(q, -s - 3.0);
    return sum;
}

constexpr int kCorrMax = 50; // correction terms available to Euler-Maclaurin

// b2f[k] = B_{2k} / (2k)!  for k = 1..kCorrMax.
const std::array<double, kCorrMax + 1>& bernoulli_over_factorial() {
    static const std::array<double, kCorrMax + 1> table = [] {
        std::array<double, kCorrMax + 1> t{};
        t[0] = 1.0;
        t[1] = 1.0 / 12.0;
        for (int k = 2; k <= kCorrMax; ++k) {
            const double sign = (k % 2 == 0) ? -1.0 : 1.0;
            t[k] = sign * 2.0 * zeta_even_integer(2 * k) /
                   std::pow(kTwoPi, 2.0 * k);
        }
        return t;
    }();
    return table;
}

const std::array<std::array<double, 41>, 41>& binomials() {
    static const std::array<std::array<double, 41>, 41> table = [] {
        std::array<std::array<double, 41>, 41> c{};
        for (int n = 0; n <= 40; ++n) {
            c[n][0] = 1.0;
            for (int j = 1; j <= n; ++j)
                c[n][j] = c[n - 1][j - 1] + (j <= n - 1 ? c[n - 1][j] : 0.0);
        }
        return c;
    }();
    return table;
}

double distance_to_nonpositive_integer(Complex z) {
    double m = std::round(z.real());
    if (m > 0.0) m = 0.0;
    return std::abs(z - Complex(m, 0.0));
}

} // namespace

const std::vector<double>& bernoulli_numbers() {
    static const std::vector<double> table = [] {
        std::vector<double> b(41, 0.0);
        b[0] = 1.0;
        b[1] = -0.5;
        double fact = 1.0;
        for (int k = 1; 2 * k <= 40; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            b[2 * k] = bernoulli_over_factorial()[k] * fact;
        }
        return b;
    }();
    return table;
}

double bernoulli_number(int n) {
    if (n < 0 || n > 40)
        throw DomainError("bernoulli_number: n must be in [0, 40]");
    return bernoulli_numbers()[n];
}

double bernoulli_periodic(int n, double x) {
    if (n < 0 || n > 40)
        throw DomainError("bernoulli_periodic: n must be in [0, 40]");
    double y = x - std::floor(x);
    const auto& b = bernoulli_numbers();
    const auto& c = binomials();
    // B_n(y) = sum_j C(n, j) B_j y^{n-j}, Horner-style in y
    double acc = 0.0;
    for (int j = 0; j <= n; ++j)
        acc = acc * y + c[n][j] * b[j];
    return acc;
}

// ---- log Gamma -------------------------------------------------------------

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (distance_to_nonpositive_integer(z) <= kPoleGuard)
        throw PoleProximity("log_gamma: argument within 1e-8 of a pole");

    // Shift until the Stirling series is accurate, collecting the product
    // of the skipped arguments as a sum of principal logs. The imaginary
    // parts stay coherent along the shift, so the result is the principal
    // branch on the cut plane.
    Complex shift(0.0, 0.0);
    Complex w = z;
    while (w.real() < 20.0) {
        shift += std::log(w);
        w += 1.0;
    }

    const double half_log_two_pi = 0.91893853320467274178;
    Complex r = (w - 0.5) * std::log(w) - w + half_log_two_pi;
    // Stirling correction: sum_k B_{2k} / (2k (2k-1) w^{2k-1})
    const auto& b2f = bernoulli_over_factorial();
    Complex winv2 = 1.0 / (w * w);
    Complex wpow = 1.0 / w;
    double fact = 1.0; // (2k)! running value of B_{2k} = b2f[k] * (2k)!
    for (int k = 1; k <= 10; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        const double coeff = b2f[k] * fact / (2.0 * k * (2.0 * k - 1.0));
        r += coeff * wpow;
        wpow *= winv2;
    }
    return r - shift;
}

ChiValue chi_full(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("chi: non-finite argument");
    if (distance_to_nonpositive_integer((1.0 - s) / 2.0) <= kPoleGuard)
        throw PoleProximity("chi: pole at s in {1, 3, 5, ...}");
    if (distance_to_nonpositive_integer(s / 2.0) <= kPoleGuard)
        return ChiValue{Complex(0.0, 0.0), true};
    const double log_pi = 1.1447298858494001741;
    const Complex lg = (s - 0.5) * log_pi + log_gamma((1.0 - s) / 2.0) -
                       log_gamma(s / 2.0);
    return ChiValue{std::exp(lg), false};
}

Complex chi(Complex s) { return chi_full(s).value; }

// ---- Euler-Maclaurin kernel ------------------------------------------------

namespace {

// Direct-term / correction-term counts. For Re s >= 0 the usual choice
// M = max(20, 2|Im s|), K = 12 covers the plane comfortably. For Re s < 0
// the direct terms grow like M^{|Re s|} while the answer does not, so every
// extra term costs digits: M shrinks to ~|s|/2 (the asymptotic correction
// series needs 2 pi M > |s| to bottom out below the target) and K runs
// until the terms stop decreasing.
EulerMaclaurinParams auto_params(Complex s) {
    EulerMaclaurinParams p;
    if (s.real() >= 0.0) {
        p.direct_terms =
            std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
        p.corrections = 12;
    } else {
        p.direct_terms =
            std::max(6, static_cast<int>(std::ceil(0.5 * std::abs(s))));
        const double k_bound = (kTwoPi * p.direct_terms - std::abs(s)) / 2.0;
        p.corrections =
            std::clamp(static_cast<int>(k_bound), 10, kCorrMax);
    }
    return p;
}

// sum_{m>=0} (m+a)^{-s} for a in (0, 1], by direct terms to M, the tail
// integral and K Bernoulli corrections. auto_stop truncates the correction
// series at its smallest term (it is asymptotic, not convergent).
Complex hurwitz_em(Complex s, double a, int M, int K, bool auto_stop) {
    Accumulator acc;
    for (int m = 0; m < M; ++m)
        acc.add(std::exp(-s * std::log(m + a)));
    const double q = M + a;
    const double lq = std::log(q);
    acc.add(std::exp((1.0 - s) * lq) / (s - 1.0));
    acc.add(0.5 * std::exp(-s * lq));

    const auto& b2f = bernoulli_over_factorial();
    Complex poch = s; // s (s+1) ... (s+2k-2), updated per k
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K; ++k) {
        const Complex term =
            b2f[k] * poch * std::exp(-(s + (2.0 * k - 1.0)) * lq);
        const double mag = std::abs(term);
        if (auto_stop && mag > prev) break;
        prev = mag;
        acc.add(term);
        poch *= (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
    }
    return acc.total;
}

// Rapidly convergent sum_{n>=1} e^{2 pi i n x} n^{-s}, requires Re s large
// (used on the reflected side where Re s >= 9.5).
Complex twisted_sum_direct(double x, Complex s) {
    Accumulator acc;
    for (int n = 1; n <= 10000; ++n) {
        const double mag = std::pow(static_cast<double>(n), -s.real());
        if (mag < 1e-18 && n > 4) break;
        const double ph = kTwoPi * std::fmod(n * x, 1.0);
        acc.add(Complex(std::cos(ph), std::sin(ph)) *
                std::exp(-s * std::log(static_cast<double>(n))));
    }
    return acc.total;
}

Complex riemann_zeta_impl(Complex s, const EulerMaclaurinParams& params,
                          bool allow_reflection);

Complex hurwitz_zeta_impl(Complex s, double a,
                          const EulerMaclaurinParams& params,
                          bool allow_reflection) {
    if (!(a > 0.0) || a > 1.0)
        throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("hurwitz_zeta: non-finite argument");
    if (std::abs(s - Complex(1.0, 0.0)) <= kPoleGuard)
        throw PoleProximity("hurwitz_zeta: pole at s = 1");

    const bool explicit_params =
        params.direct_terms > 0 || params.corrections > 0;
    if (explicit_params) {
        EulerMaclaurinParams p = params;
        if (p.direct_terms <= 0) p.direct_terms = auto_params(s).direct_terms;
        if (p.corrections <= 0) p.corrections = auto_params(s).corrections;
        return hurwitz_em(s, a, p.direct_terms,
                          std::min(p.corrections, kCorrMax), false);
    }

    // Left of -8 double-precision Euler-Maclaurin loses absolute
    // accuracy to cancellation; switch to the Hurwitz-formula
    // reflection, whose ingredients all evaluate at Re = 1 - Re s > 9.
    if (allow_reflection && s.real() < -8.0) {
        const Complex sp = 1.0 - s;
        const Complex pref =
            std::exp(log_gamma(sp) - sp * std::log(kTwoPi));
        const Complex rot = std::exp(Complex(0.0, -kPi / 2.0) * sp);
        const Complex f1 = twisted_sum_direct(a, sp);
        const Complex f2 = twisted_sum_direct(1.0 - a, sp);
        return pref * (rot * f1 + f2 / rot);
    }

    const EulerMaclaurinParams p = auto_params(s);
    return hurwitz_em(s, a, p.direct_terms, p.corrections, true);
}

Complex riemann_zeta_impl(Complex s, const EulerMaclaurinParams& params,
                          bool allow_reflection) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("riemann_zeta: non-finite argument");
    if (std::abs(s - Complex(1.0, 0.0)) <= kPoleGuard)
        throw PoleProximity("riemann_zeta: pole at s = 1");

    const bool explicit_params =
        params.direct_terms > 0 || params.corrections > 0;
    if (!explicit_params && allow_reflection && s.real() < -8.0) {
        // zeta(s) = chi(s) zeta(1-s); the right side evaluates at
        // Re > 9 where Euler-Maclaurin is exact to rounding. On
        // [-8, inf) the direct formula is kept so that functional
        // equation checks there compare two independent continuations.
        const ChiValue c = chi_full(s);
        if (c.exact_zero) return Complex(0.0, 0.0);
        return c.value * riemann_zeta_impl(1.0 - s, EulerMaclaurinParams{},
                                           false);
    }
    return hurwitz_zeta_impl(s, 1.0, params, false);
}

} // namespace

Complex riemann_zeta(Complex s) {
    return riemann_zeta_impl(s, EulerMaclaurinParams{}, true);
}

Complex riemann_zeta(Complex s, const EulerMaclaurinParams& params) {
    return riemann_zeta_impl(s, params, true);
}

Complex hurwitz_zeta(Complex s, double a) {
    return hurwitz_zeta_impl(s, a, EulerMaclaurinParams{}, true);
}

Complex hurwitz_zeta(Complex s, double a, const EulerMaclaurinParams& params) {
    return hurwitz_zeta_impl(s, a, params, true);
}

// ---- oscillatory sums by iterated summation by parts ----------------------

namespace {

// sum_{m>=0} e^{2 pi i (m+a) x} (m+a)^{-s} for x in [-1/2, 1/2] \ {0},
// a in (0, 1], Re s >= 1/2.
//
// N direct terms, then `order` levels of Abel summation on the tail:
//   sum_{m>=N} z^m b_m = z^N/(1-z) sum_{j<order} u^j (Delta^j b)_N + ...
// with u = z/(1-z) and the final remainder dropped. Each difference level
// divides the truncation error by ~N/|u| but multiplies rounding noise by
// ~2|u|, so (order, N) are chosen per call by balancing
//   truncation ~ (A/2)^{order+1} |(s)_order| N^{-Re s - order}
//   noise      ~ eps A^order N^{-Re s},          A = 2/|1-z| = 1/|sin(pi x)|.
struct Ladder {
    int order;
    long long n_direct;
};

constexpr double kLadderTol = 1e-11;
constexpr long long kLadderCap = 40'000'000;

Ladder select_ladder(double x, Complex s) {
    const double sigma = s.real();
    const double a_amp = 1.0 / std::abs(std::sin(kPi * x));
    const double abs_s = std::abs(s);
    const double log_tol = std::log(kLadderTol);
    Ladder best{2, kLadderCap + 1};
    double lp = 0.0; // log |s (s+1) ... (s+order-1)|
    for (int order = 1; order <= 24; ++order) {
        lp += std::log(std::abs(s + Complex(order - 1.0, 0.0)) + 1e-300);
        if (order < 2) continue;
        const double ln_trunc =
            ((order + 1) * std::log(a_amp / 2.0) + lp - log_tol) /
            (sigma + order);
        const double ln_noise =
            (std::log(kEps) + order * std::log(a_amp) - log_tol) / sigma;
        double ln_n = std::max(
            {ln_trunc, ln_noise,
             std::log(a_amp * (abs_s + order) + 16.0), std::log(32.0)});
        ln_n = std::min(ln_n, std::log(static_cast<double>(kLadderCap)));
        const long long n = static_cast<long long>(std::ceil(std::exp(ln_n)));
        if (n < best.n_direct) best = Ladder{order, n};
    }
    return best;
}

Complex ladder_sum(double x, double a, Complex s) {
    const Ladder plan = select_ladder(x, s);
    const long long N = plan.n_direct;
    const int order = plan.order;
    const Complex z(std::cos(kTwoPi * x), std::sin(kTwoPi * x));

    Accumulator acc;
    for (long long n = 0; n < N; ++n) {
        const double ph = kTwoPi * std::fmod((n + a) * x, 1.0);
        acc.add(Complex(std::cos(ph), std::sin(ph)) *
                std::exp(-s * std::log(n + a)));
    }

    std::vector<Complex> v(order);
    for (int i = 0; i < order; ++i)
        v[i] = std::exp(-s * std::log(N + i + a));
    const Complex u = z / (1.0 - z);
    const double ph_n = kTwoPi * std::fmod((N + a) * x, 1.0);
    const Complex pref =
        Complex(std::cos(ph_n), std::sin(ph_n)) / (1.0 - z);
    Complex upow(1.0, 0.0);
    Complex head(0.0, 0.0);
    for (int j = 0; j < order; ++j) {
        head += upow * v[0];
        upow *= u;
        for (int i = 0; i < order - 1 - j; ++i) v[i] = v[i + 1] - v[i];
    }
    acc.add(pref * head);
    return acc.total;
}

// Plain Lerch transcendent Phi(e^{2 pi i x}, s, a) = sum z^m (m+a)^{-s},
// any real twist x, offset a in (0, 1]; needs Re s >= 1/2.
Complex phi_part(double twist, double a, Complex s) {
    const double xr = twist - std::round(twist);
    if (std::abs(xr) < 1e-9) return hurwitz_zeta(s, a);
    const double ph = -kTwoPi * a * xr;
    return Complex(std::cos(ph), std::sin(ph)) * ladder_sum(xr, a, s);
}

} // namespace

Complex periodic_zeta(double e, Complex s) {
    if (!(e > 0.0) || e > 1.0)
        throw DomainError("periodic_zeta: e must lie in (0, 1]");
    if (std::abs(e - 1.0) < 1e-9) return riemann_zeta(s);
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("periodic_zeta: non-finite argument");

    if (s.real() >= 0.5) {
        const double x = (e <= 0.5) ? e : e - 1.0;
        return ladder_sum(x, 1.0, s);
    }
    // Inversion through the Hurwitz formula: everything on the right is
    // evaluated at 1-s with Re >= 1/2.
    const Complex sp = 1.0 - s;
    const Complex pref =
        std::exp(log_gamma(sp) + (s - 1.0) * std::log(kTwoPi));
    const Complex rot = std::exp(Complex(0.0, kPi / 2.0) * sp);
    return pref * (rot * hurwitz_zeta(sp, e) + hurwitz_zeta(sp, 1.0 - e) / rot);
}

Complex lerch_sum(double d, double e, Complex s) {
    if (!(d > 0.0) || d > 1.0)
        throw DomainError("lerch_sum: d must lie in (0, 1]");
    if (!(e > 0.0) || e > 1.0)
        throw DomainError("lerch_sum: e must lie in (0, 1]");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("lerch_sum: non-finite argument");

    if (std::abs(e - 1.0) < 1e-9) {
        const double ph = kTwoPi * d;
        return Complex(std::cos(ph), std::sin(ph)) * hurwitz_zeta(s, d);
    }
    if (s.real() >= 0.5) {
        // note: remapping e -> e-1 would scale the value by e^{-2 pi i d}
        // because the twist rides on the offset points d+m, not on m
        return ladder_sum(e, d, s);
    }

    // Transformation formula for the Lerch transcendent: expresses
    // Phi(e^{2 pi i e}, s, d) through two Phi values at 1-s (Re >= 1/2)
    // with twists -d and d, offsets e and 1-e.
    const Complex sp = 1.0 - s;
    const Complex pref =
        std::exp(log_gamma(sp) + (s - 1.0) * std::log(kTwoPi));
    const Complex half_rot = std::exp(Complex(0.0, kPi / 2.0) * sp);
    const Complex t1 =
        std::polar(1.0, -kTwoPi * d * e) * half_rot * phi_part(-d, e, sp);
    const Complex t2 = std::polar(1.0, kTwoPi * d * (1.0 - e)) / half_rot *
                       phi_part(d, 1.0 - e, sp);
    const Complex phi = pref * (t1 + t2);
    return std::polar(1.0, kTwoPi * e * d) * phi;
}

double theta(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("theta: t must be positive");
    double sum = 1.0;
    for (int n = 1; n < 100000; ++n) {
        const double term = std::exp(-kPi * n * static_cast<double>(n) * t);
        if (term < 1e-17) break;
        sum += 2.0 * term;
    }
    return sum;
}

} // namespace zetacomb

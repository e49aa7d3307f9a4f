#include "zetacomb/measures.hpp"

#include "zetacomb/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace zetacomb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeTol = 1e-9;    // positions and residue clustering
constexpr double kMatchTol = 1e-7;    // class/root bookkeeping inside Prony
constexpr double kSingularRel = 1e-9; // Hankel rank cut relative to the top
constexpr double kSnapTol = 1e-6;     // how far a root may sit off the circle
constexpr double kRoundTripTol = 1e-8;
constexpr int kMaxClasses = 16;
constexpr int kRankMax = 8;

// e^{2 pi i turns} with the argument reduced first; turns grows with the
// window, and the unreduced angle would shed digits.
Complex circle(double turns) {
    return std::polar(1.0, 2.0 * kPi * (turns - std::round(turns)));
}

void sort_and_merge(std::vector<Atom>& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    std::vector<Atom> merged;
    std::size_t i = 0;
    while (i < raw.size()) {
        Atom acc = raw[i];
        std::size_t j = i + 1;
        while (j < raw.size() && raw[j].position - raw[i].position <= kMergeTol) {
            acc.coefficient += raw[j].coefficient;
            ++j;
        }
        merged.push_back(acc);
        i = j;
    }
    // exact cancellations (the d = e = 1/2 component is the zero measure)
    // leave rounding dust behind; sweep it out relative to the largest atom
    double top = 0.0;
    for (const Atom& a : merged) top = std::max(top, std::abs(a.coefficient));
    std::erase_if(merged, [top](const Atom& a) {
        return std::abs(a.coefficient) <= 1e-12 * top;
    });
    raw = std::move(merged);
}

double max_coefficient(const AtomicEvenMeasure& m) {
    double top = 0.0;
    for (const Atom& a : m.atoms) top = std::max(top, std::abs(a.coefficient));
    return top;
}

// Largest merged coefficient difference between two sorted atom lists,
// atoms matched by position at the merge tolerance.
double atom_difference(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    double worst = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const bool onlyA =
            j == b.size() || (i < a.size() && a[i].position < b[j].position - kMergeTol);
        const bool onlyB =
            !onlyA && (i == a.size() || b[j].position < a[i].position - kMergeTol);
        if (onlyA) {
            worst = std::max(worst, std::abs(a[i].coefficient));
            ++i;
        } else if (onlyB) {
            worst = std::max(worst, std::abs(b[j].coefficient));
            ++j;
        } else {
            worst = std::max(worst, std::abs(a[i].coefficient - b[j].coefficient));
            ++i;
            ++j;
        }
    }
    return worst;
}

// One exponential detected in one residue class.
struct RootHit {
    double residue;
    double phase; // root = circle(phase), phase in (0, 1]
    Complex amplitude;
};

} // namespace

AtomicEvenMeasure expand_window(const TdeDecomposition& dec, double window) {
    if (!(window >= 1.0))
        throw DomainError("expand_window: window must be at least 1");
    AtomicEvenMeasure out;
    std::vector<Atom> raw;
    for (const TdeTerm& term : dec.terms) {
        const double d = term.params.d;
        const double e = term.params.e;
        const Complex half = 0.5 * term.coefficient * circle(-0.5 * d * e);
        // direct comb x = d mod 1 carries e^{2 pi i e x}, the mirror comb
        // x = -d mod 1 the conjugate twist; integral d puts one copy of
        // each onto the origin.
        const double rd = frac_pos(d);
        for (double x = rd; x <= window + kMergeTol; x += 1.0)
            raw.push_back({x, half * circle(e * x)});
        const double rm = frac_pos(-d);
        for (double x = rm; x <= window + kMergeTol; x += 1.0)
            raw.push_back({x, half * circle(-e * x)});
        if (rd == 1.0)
            out.origin_coefficient += 2.0 * half;
    }
    sort_and_merge(raw);
    out.atoms = std::move(raw);
    return out;
}

ProgressionSupport detect_progressions(const AtomicEvenMeasure& m) {
    std::vector<double> folded;
    folded.reserve(m.atoms.size());
    for (const Atom& a : m.atoms) folded.push_back(frac_pos(a.position));
    std::sort(folded.begin(), folded.end());
    ProgressionSupport out;
    std::size_t i = 0;
    while (i < folded.size()) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < folded.size() && folded[j] - folded[i] <= kMergeTol) sum += folded[j++];
        out.residues.push_back(sum / static_cast<double>(j - i));
        if (static_cast<int>(out.residues.size()) > kMaxClasses)
            throw TooManyClasses("support spreads over more than 16 residue classes");
        i = j;
    }
    return out;
}

TdeDecomposition decompose_prony(const AtomicEvenMeasure& m, double window) {
    if (!(window >= 1.0))
        throw DomainError("decompose_prony: window must be at least 1");
    for (const Atom& a : m.atoms)
        if (!(a.position > 0.0) || a.position > window + kMergeTol)
            throw DomainError("decompose_prony: atom outside (0, window]");
    TdeDecomposition dec;
    if (m.atoms.empty()) return dec; // at most an origin Dirac, invisible to f

    const ProgressionSupport support = detect_progressions(m);
    const std::size_t nclass = support.residues.size();

    // zero-filled coefficient sequences along each progression r + p
    std::vector<std::vector<Complex>> seqs(nclass);
    for (std::size_t k = 0; k < nclass; ++k) {
        const int len =
            static_cast<int>(std::floor(window - support.residues[k] + kMergeTol)) + 1;
        seqs[k].assign(static_cast<std::size_t>(std::max(len, 1)), Complex{0.0, 0.0});
    }
    for (const Atom& a : m.atoms) {
        const double f = frac_pos(a.position);
        std::size_t best = 0;
        double dist = 2.0;
        for (std::size_t k = 0; k < nclass; ++k) {
            const double dk = std::abs(f - support.residues[k]);
            if (dk < dist) {
                dist = dk;
                best = k;
            }
        }
        const long p = std::lround(a.position - support.residues[best]);
        if (p >= 0 && p < static_cast<long>(seqs[best].size()))
            seqs[best][static_cast<std::size_t>(p)] += a.coefficient;
    }

    std::vector<RootHit> hits;
    for (std::size_t k = 0; k < nclass; ++k) {
        const std::vector<Complex>& c = seqs[k];
        const int P = static_cast<int>(c.size());
        double top = 0.0;
        for (const Complex& v : c) top = std::max(top, std::abs(v));
        if (top == 0.0) continue;
        const int cap = std::min(kRankMax, (P - 2) / 2);
        if (cap < 1)
            throw InsufficientWindow("residue class " + std::to_string(support.residues[k]) +
                                     " has only " + std::to_string(P) + " samples");

        // rank of the Hankel form decides the recurrence order
        Eigen::MatrixXcd H(P - cap, cap + 1);
        for (int i = 0; i + cap < P; ++i)
            for (int j = 0; j <= cap; ++j) H(i, j) = c[static_cast<std::size_t>(i + j)];
        Eigen::JacobiSVD<Eigen::MatrixXcd> probe(H);
        const auto& sv = probe.singularValues();
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > kSingularRel * sv(0)) ++rank;
        if (rank == cap + 1) {
            if (cap < kRankMax)
                throw InsufficientWindow("residue class " + std::to_string(support.residues[k]) +
                                         " window too short for its exponential rank");
            throw NotFiniteCombination("exponential rank exceeds the supported maximum");
        }
        const int R = rank;

        // minimal annihilating recurrence: nullvector of the order-R Hankel
        Eigen::MatrixXcd HR(P - R, R + 1);
        for (int i = 0; i + R < P; ++i)
            for (int j = 0; j <= R; ++j) HR(i, j) = c[static_cast<std::size_t>(i + j)];
        Eigen::JacobiSVD<Eigen::MatrixXcd> null(HR, Eigen::ComputeThinV);
        Eigen::VectorXcd q = null.matrixV().col(R);
        if (std::abs(q(R)) < 1e-8 * q.cwiseAbs().maxCoeff())
            throw NotFiniteCombination("annihilating recurrence drops its leading term");

        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(R, R);
        for (int i = 0; i + 1 < R; ++i) comp(i + 1, i) = 1.0;
        for (int i = 0; i < R; ++i) comp(i, R - 1) = -q(i) / q(R);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> roots(comp);
        std::vector<double> phases;
        for (int i = 0; i < R; ++i) {
            const Complex z = roots.eigenvalues()(i);
            if (std::abs(std::abs(z) - 1.0) > kSnapTol)
                throw NotFiniteCombination("recurrence root off the unit circle");
            phases.push_back(frac_pos(std::atan2(z.imag(), z.real()) / (2.0 * kPi)));
        }
        std::sort(phases.begin(), phases.end());

        Eigen::MatrixXcd V(P, R);
        Eigen::VectorXcd rhs(P);
        for (int p = 0; p < P; ++p) {
            rhs(p) = c[static_cast<std::size_t>(p)];
            for (int j = 0; j < R; ++j) V(p, j) = circle(phases[static_cast<std::size_t>(j)] * p);
        }
        Eigen::VectorXcd w =
            V.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
        for (int j = 0; j < R; ++j)
            hits.push_back({support.residues[k], phases[static_cast<std::size_t>(j)], w(j)});
    }

    // Mirror-pair (class, root) hits into canonical terms. Each generic term
    // shows up from two classes, the self-paired ones once with a doubled
    // unit amplitude; the two-branch formula below covers both.
    struct Partial {
        double dsum, esum;
        Complex csum;
        int n;
    };
    std::vector<Partial> parts;
    for (const RootHit& h : hits) {
        const double dA = h.residue, eA = h.phase;
        const double dB = frac_pos(-dA), eB = frac_pos(-eA);
        double dd, ee;
        if (is_canonical(dA, eA)) {
            dd = dA;
            ee = eA;
        } else if (is_canonical(dB, eB)) {
            dd = dB;
            ee = eB;
        } else {
            const PhasedTde red = reduce_params(dA, eA); // boundary straddle
            dd = red.params.d;
            ee = red.params.e;
        }
        Complex u{0.0, 0.0};
        const Complex base = 0.5 * circle(-0.5 * dd * ee);
        if (std::abs(frac_pos(dd) - h.residue) <= kMatchTol &&
            std::abs(frac_pos(ee) - h.phase) <= kMatchTol)
            u += base * circle(ee * h.residue);
        if (std::abs(frac_pos(-dd) - h.residue) <= kMatchTol &&
            std::abs(frac_pos(-ee) - h.phase) <= kMatchTol)
            u += base * circle(-ee * h.residue);
        if (std::abs(u) < 1e-9)
            throw NotFiniteCombination("mirror pairing degenerates (zero unit amplitude)");
        const Complex cand = h.amplitude / u;
        bool found = false;
        for (Partial& p : parts) {
            if (std::abs(p.dsum / p.n - dd) <= kMatchTol &&
                std::abs(p.esum / p.n - ee) <= kMatchTol) {
                p.dsum += dd;
                p.esum += ee;
                p.csum += cand;
                ++p.n;
                found = true;
                break;
            }
        }
        if (!found) parts.push_back({dd, ee, cand, 1});
    }
    std::sort(parts.begin(), parts.end(), [](const Partial& a, const Partial& b) {
        const double da = a.dsum / a.n, db = b.dsum / b.n;
        if (da != db) return da < db;
        return a.esum / a.n < b.esum / b.n;
    });
    for (const Partial& p : parts)
        dec.terms.push_back(
            {{p.dsum / p.n, p.esum / p.n}, p.csum / static_cast<double>(p.n)});

    // round trip against the input window
    const AtomicEvenMeasure re = expand_window(dec, window);
    const double scale = std::max(1.0, max_coefficient(m));
    const double resid = atom_difference(m.atoms, re.atoms);
    if (resid > kRoundTripTol * scale)
        throw NotFiniteCombination("round trip residual " + std::to_string(resid));

    // the origin Dirac is free unless an integral class pins it down
    bool integral_class = false;
    for (const TdeTerm& t : dec.terms)
        if (std::abs(t.params.d - 1.0) <= kMatchTol) integral_class = true;
    if (integral_class &&
        std::abs(re.origin_coefficient - m.origin_coefficient) >
            kRoundTripTol * std::max(scale, std::abs(m.origin_coefficient)))
        std::cerr << "decompose_prony: origin coefficient " << m.origin_coefficient
                  << " disagrees with the combination's " << re.origin_coefficient
                  << "\n";
    return dec;
}

TdeDecomposition fourier_measure(const TdeDecomposition& dec) {
    TdeDecomposition out;
    for (const TdeTerm& t : dec.terms) {
        const PhasedTde ft = fourier_map(t.params.d, t.params.e);
        const Complex c = t.coefficient * ft.phase;
        bool merged = false;
        for (TdeTerm& u : out.terms) {
            if (std::abs(u.params.d - ft.params.d) <= kMergeTol &&
                std::abs(u.params.e - ft.params.e) <= kMergeTol) {
                u.coefficient += c;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back({ft.params, c});
    }
    double top = 0.0;
    for (const TdeTerm& t : out.terms) top = std::max(top, std::abs(t.coefficient));
    std::erase_if(out.terms, [top](const TdeTerm& t) {
        return std::abs(t.coefficient) <= 1e-15 * top;
    });
    std::sort(out.terms.begin(), out.terms.end(), [](const TdeTerm& a, const TdeTerm& b) {
        if (a.params.d != b.params.d) return a.params.d < b.params.d;
        return a.params.e < b.params.e;
    });
    return out;
}

double gaussian_pairing_check(const TdeDecomposition& dec, double t, double window) {
    if (!(t > 0.0))
        throw DomainError("gaussian_pairing_check: t must be positive");
    const double x2 = window * window;
    if (!(window >= 1.0) || std::exp(-kPi * t * x2) >= 1e-16 ||
        std::exp(-kPi * x2 / t) >= 1e-16)
        throw DomainError("gaussian_pairing_check: window too small for the Gaussian tails");
    const AtomicEvenMeasure direct = expand_window(dec, window);
    const AtomicEvenMeasure dual = expand_window(fourier_measure(dec), window);
    // <D, psi_hat_t> against <F(D), psi_t>, psi_t(x) = e^{-pi t x^2} whose
    // transform is t^{-1/2} psi_{1/t}; atoms count twice for their mirrors
    const double rt = std::sqrt(t);
    Complex lhs = direct.origin_coefficient / rt;
    for (const Atom& a : direct.atoms)
        lhs += 2.0 / rt * a.coefficient * std::exp(-kPi * a.position * a.position / t);
    Complex rhs = dual.origin_coefficient;
    for (const Atom& a : dual.atoms)
        rhs += 2.0 * a.coefficient * std::exp(-kPi * t * a.position * a.position);
    return std::abs(lhs - rhs);
}

Complex mellin_of_measure(const AtomicEvenMeasure& m, Complex s) {
    Complex sum{0.0, 0.0};
    // far atoms first so the small terms accumulate before the large ones
    for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it)
        sum += it->coefficient * std::exp(-s * std::log(it->position));
    return sum;
}

} // namespace zetacomb

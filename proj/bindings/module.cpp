#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetacomb/dirichlet.hpp"
#include "zetacomb/errors.hpp"
#include "zetacomb/measures.hpp"
#include "zetacomb/specfun.hpp"
#include "zetacomb/tde.hpp"
#include "zetacomb/verify.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace zetacomb;

namespace {

// decomposition <-> list of (d, e, coefficient); measure <-> (atoms, origin)
// with atoms a list of (position, coefficient). Plain tuples keep the Python
// side free of wrapper classes.
using PyTerm = std::tuple<double, double, Complex>;
using PyAtom = std::pair<double, Complex>;

TdeDecomposition to_dec(const std::vector<PyTerm>& terms) {
    TdeDecomposition dec;
    for (const auto& [d, e, c] : terms) dec.terms.push_back({{d, e}, c});
    return dec;
}

std::vector<PyTerm> from_dec(const TdeDecomposition& dec) {
    std::vector<PyTerm> terms;
    for (const TdeTerm& t : dec.terms) terms.push_back({t.params.d, t.params.e, t.coefficient});
    return terms;
}

AtomicEvenMeasure to_measure(const std::vector<PyAtom>& atoms, Complex origin) {
    AtomicEvenMeasure m;
    for (const auto& [x, c] : atoms) m.atoms.push_back({x, c});
    m.origin_coefficient = origin;
    return m;
}

std::pair<std::vector<PyAtom>, Complex> from_measure(const AtomicEvenMeasure& m) {
    std::vector<PyAtom> atoms;
    for (const Atom& a : m.atoms) atoms.push_back({a.position, a.coefficient});
    return {std::move(atoms), m.origin_coefficient};
}

py::dict report_dict(const VerificationReport& rep) {
    py::list checks;
    for (const Check& c : rep.checks) {
        py::dict entry;
        entry["label"] = c.label;
        entry["max_error"] = c.max_error;
        entry["tolerance"] = c.tolerance;
        entry["passed"] = c.passed;
        checks.append(entry);
    }
    py::dict out;
    out["suite"] = rep.suite;
    out["seed"] = rep.seed;
    out["passed"] = rep.passed();
    out["checks"] = checks;
    return out;
}

} // namespace

PYBIND11_MODULE(_zetacomb, m) {
    m.doc() = "functional-equation toolkit: chi factor, zeta shifts, comb "
              "measures, Prony decomposition, verification suites";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // special functions
    m.def("chi", &chi, py::arg("s"), "pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2)");
    m.def(
        "chi_full",
        [](Complex s) {
            const ChiValue v = chi_full(s);
            return std::make_pair(v.value, v.exact_zero);
        },
        py::arg("s"), "(chi(s), exact_zero flag)");
    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("riemann_zeta", py::overload_cast<Complex>(&riemann_zeta), py::arg("s"));
    m.def("hurwitz_zeta", py::overload_cast<Complex, double>(&hurwitz_zeta), py::arg("s"),
          py::arg("a"));
    m.def("periodic_zeta", &periodic_zeta, py::arg("e"), py::arg("s"),
          "sum_n exp(2 pi i e n) n^{-s}");
    m.def("lerch_sum", &lerch_sum, py::arg("d"), py::arg("e"), py::arg("s"),
          "sum_m exp(2 pi i e (d+m)) (d+m)^{-s}");
    m.def("theta", &theta, py::arg("t"), "sum_{n in Z} exp(-pi n^2 t)");
    m.def("bernoulli_number", &bernoulli_number, py::arg("n"));
    m.def("bernoulli_periodic", &bernoulli_periodic, py::arg("n"), py::arg("x"));

    // translated-and-twisted combs
    m.def("frac_pos", &frac_pos, py::arg("x"));
    m.def("is_canonical", &is_canonical, py::arg("d"), py::arg("e"));
    m.def(
        "reduce_params",
        [](double d, double e) {
            const PhasedTde r = reduce_params(d, e);
            return std::make_tuple(r.params.d, r.params.e, r.phase);
        },
        py::arg("d"), py::arg("e"), "(d', e', unit phase) in the canonical box");
    m.def(
        "fourier_map",
        [](double d, double e) {
            const PhasedTde r = fourier_map(d, e);
            return std::make_tuple(r.params.d, r.params.e, r.phase);
        },
        py::arg("d"), py::arg("e"), "canonical image of (-e, d) with its phase");
    m.def("tde_f", &tde_f, py::arg("d"), py::arg("e"), py::arg("s"));
    m.def("tde_g", &tde_g, py::arg("d"), py::arg("e"), py::arg("s"));
    m.def(
        "completed_residues",
        [](double d, double e) {
            const CompletedResidues r = completed_residues(d, e);
            py::dict out;
            out["pole_at_0"] = r.pole_at_0 ? py::cast(*r.pole_at_0) : py::none();
            out["pole_at_1"] = r.pole_at_1 ? py::cast(*r.pole_at_1) : py::none();
            out["near_degenerate"] = r.near_degenerate;
            return out;
        },
        py::arg("d"), py::arg("e"));

    // shifted-zeta combinations
    m.def("zeta_shift_g", &zeta_shift_g, py::arg("k"), py::arg("s"));
    m.def(
        "combo_f",
        [](const std::map<int, Complex>& coeff, Complex s) {
            return combo_f({coeff}, s);
        },
        py::arg("coefficients"), py::arg("s"), "sum_k c_k zeta(s - 2k)");
    m.def(
        "combo_g",
        [](const std::map<int, Complex>& coeff, Complex s) {
            return combo_g({coeff}, s);
        },
        py::arg("coefficients"), py::arg("s"));
    m.def(
        "recover_shift_coefficients",
        [](const std::vector<std::pair<double, Complex>>& samples, int k_min, int k_max) {
            const RecoveryResult r = recover_shift_coefficients(samples, k_min, k_max);
            py::dict out;
            out["coefficients"] = r.combination.coefficients;
            out["residual"] = r.residual;
            out["condition_number"] = r.condition_number;
            return out;
        },
        py::arg("samples"), py::arg("k_min"), py::arg("k_max"));
    m.def("estimate_support_gap", &estimate_support_gap, py::arg("g"), py::arg("sigma"));

    // measures and decompositions
    m.def(
        "expand_window",
        [](const std::vector<PyTerm>& terms, double window) {
            return from_measure(expand_window(to_dec(terms), window));
        },
        py::arg("terms"), py::arg("window"), "(atoms, origin) on (0, window]");
    m.def(
        "detect_progressions",
        [](const std::vector<PyAtom>& atoms, Complex origin) {
            return detect_progressions(to_measure(atoms, origin)).residues;
        },
        py::arg("atoms"), py::arg("origin") = Complex{0.0, 0.0});
    m.def(
        "decompose_prony",
        [](const std::vector<PyAtom>& atoms, Complex origin, double window) {
            return from_dec(decompose_prony(to_measure(atoms, origin), window));
        },
        py::arg("atoms"), py::arg("origin"), py::arg("window"));
    m.def(
        "fourier_measure",
        [](const std::vector<PyTerm>& terms) { return from_dec(fourier_measure(to_dec(terms))); },
        py::arg("terms"));
    m.def(
        "gaussian_pairing_check",
        [](const std::vector<PyTerm>& terms, double t, double window) {
            return gaussian_pairing_check(to_dec(terms), t, window);
        },
        py::arg("terms"), py::arg("t"), py::arg("window"));
    m.def(
        "mellin_of_measure",
        [](const std::vector<PyAtom>& atoms, Complex origin, Complex s) {
            return mellin_of_measure(to_measure(atoms, origin), s);
        },
        py::arg("atoms"), py::arg("origin"), py::arg("s"));

    // verification
    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed) {
            return report_dict(run_suite(name, seed));
        },
        py::arg("name"), py::arg("seed") = 0);
}

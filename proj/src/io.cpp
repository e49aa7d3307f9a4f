#include "zetacomb/io.hpp"

#include "zetacomb/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>

namespace zetacomb {

namespace {
using nlohmann::json;

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw DomainError(std::string("missing numeric field \"") + key + "\"");
    return j.at(key).get<double>();
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw DomainError("malformed JSON");
    return j;
}
} // namespace

std::string measure_to_json(const AtomicEvenMeasure& m) {
    json atoms = json::array();
    for (const Atom& a : m.atoms)
        atoms.push_back({{"x", a.position},
                         {"re", a.coefficient.real()},
                         {"im", a.coefficient.imag()}});
    json j{{"atoms", std::move(atoms)},
           {"origin",
            {{"re", m.origin_coefficient.real()}, {"im", m.origin_coefficient.imag()}}}};
    return j.dump(2);
}

AtomicEvenMeasure measure_from_json(const std::string& text) {
    const json j = parse(text);
    AtomicEvenMeasure m;
    if (j.contains("origin"))
        m.origin_coefficient =
            Complex{number_field(j.at("origin"), "re"), number_field(j.at("origin"), "im")};
    if (j.contains("atoms")) {
        if (!j.at("atoms").is_array()) throw DomainError("\"atoms\" must be an array");
        for (const json& a : j.at("atoms")) {
            const double x = number_field(a, "x");
            if (!(x > 0.0)) throw DomainError("atom positions must be positive");
            m.atoms.push_back({x, Complex{number_field(a, "re"), number_field(a, "im")}});
        }
    }
    std::sort(m.atoms.begin(), m.atoms.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    return m;
}

std::string decomposition_to_json(const TdeDecomposition& dec) {
    json terms = json::array();
    for (const TdeTerm& t : dec.terms)
        terms.push_back({{"d", t.params.d},
                         {"e", t.params.e},
                         {"re", t.coefficient.real()},
                         {"im", t.coefficient.imag()}});
    return json{{"terms", std::move(terms)}}.dump(2);
}

TdeDecomposition decomposition_from_json(const std::string& text) {
    const json j = parse(text);
    TdeDecomposition dec;
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw DomainError("decomposition needs a \"terms\" array");
    for (const json& t : j.at("terms"))
        dec.terms.push_back({{number_field(t, "d"), number_field(t, "e")},
                             Complex{number_field(t, "re"), number_field(t, "im")}});
    return dec;
}

std::string report_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const Check& c : report.checks)
        checks.push_back({{"label", c.label},
                          {"max_error", c.max_error},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    json j{{"suite", report.suite},
           {"seed", report.seed},
           {"passed", report.passed()},
           {"checks", std::move(checks)}};
    return j.dump(2);
}

std::string format_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace zetacomb

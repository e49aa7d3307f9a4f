#pragma once

// JSON serialization for measures, decompositions and verification
// reports, shared by the command line tool and the tests. Numbers are
// written so that reading them back reproduces the doubles exactly.

#include "zetacomb/measures.hpp"
#include "zetacomb/verify.hpp"

#include <string>

namespace zetacomb {

// {"atoms":[{"x":..,"re":..,"im":..},...],"origin":{"re":..,"im":..}}
std::string measure_to_json(const AtomicEvenMeasure& m);
AtomicEvenMeasure measure_from_json(const std::string& text);

// {"terms":[{"d":..,"e":..,"re":..,"im":..},...]}
std::string decomposition_to_json(const TdeDecomposition& dec);
TdeDecomposition decomposition_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);

// "re+imi" with enough digits to round trip, e.g. "1+0i".
std::string format_complex(Complex z);

} // namespace zetacomb

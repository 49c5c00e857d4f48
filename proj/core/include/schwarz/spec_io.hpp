#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schwarz/counterexamples.hpp"
#include "schwarz/profile.hpp"
#include "schwarz/symmetral.hpp"

namespace schwarz {
namespace io {

// Constant expression evaluator for spec files: numbers, pi, + - * / ^,
// parentheses, unary sign. Throws parse_error on malformed input.
double eval_number_expr(const std::string& text);

// In-memory form of a profile spec document (schema_version "1").
struct SpecDocument {
    Profile profile;
    std::optional<BVFunction> drift;
    std::optional<std::vector<double>> direction;

    // The described set: a drifted tube, or the symmetral when no drift.
    TubeSet to_tube() const;
};

SpecDocument parse_spec_text(const std::string& text);
SpecDocument parse_spec_file(const std::string& path);

std::string serialize(const SpecDocument& doc);

// Witness spec file: document plus kind/provenance/verification metadata
// (ignored when re-parsed, so it re-parses to the same tube).
std::string serialize_witness(const WitnessSet& witness, const InequalityCheck& verification);

} // namespace io
} // namespace schwarz

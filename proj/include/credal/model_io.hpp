#pragma once

#include <string>
#include <utility>
#include <vector>

#include "credal/core.hpp"

namespace credal {

/// Parsed model file: a frame plus either credal extreme points or a
/// mass assignment. Parse tolerance for sums is 1e-6; vectors are
/// renormalized exactly on conversion.
struct ModelDocument {
    enum class Kind { credal, mass };

    FramePtr frame;
    Kind kind = Kind::credal;
    std::vector<std::vector<double>> extreme_points;                 // kind == credal
    std::vector<std::pair<std::vector<std::string>, double>> focal;  // kind == mass
};

ModelDocument parse_model(const std::string& text);
std::string serialize_model(const ModelDocument& doc);

// Mass documents are expanded through credal_from_mass.
CredalSet model_credal(const ModelDocument& doc);
MassAssignment model_mass(const ModelDocument& doc); // throws for credal kind

// Comma-separated outcome labels; whitespace around labels is ignored.
Event parse_event(const FramePtr& frame, const std::string& csv);

} // namespace credal

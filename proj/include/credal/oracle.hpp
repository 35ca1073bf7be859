#pragma once

#include <utility>
#include <vector>

#include "credal/conditioning.hpp"
#include "credal/core.hpp"

namespace credal {

// Brute-force verification by dense sampling of the conditional convex
// set: barycentric coordinates on the uniform simplex grid over the
// unnormalized generators. Throws resolution_too_high when the grid
// exceeds 10^7 combinations.

// (possibility, conditional value) per grid point; zero-total
// combinations are skipped.
std::vector<std::pair<double, double>>
grid_points(const WeightedConditionalSet& w, const Event& a, std::size_t resolution);

// Riemann mean of the step envelope G(beta) = max sampled value with
// possibility >= beta; converges to choquet_full_interval(...).upper.
double oracle_upper_choquet(const WeightedConditionalSet& w, const Event& a,
                            std::size_t resolution);

// Max over samples of min(value, possibility); converges to
// sugeno_full_interval(...).upper.
double oracle_upper_sugeno(const WeightedConditionalSet& w, const Event& a,
                           std::size_t resolution);

// Bins samples by value and keeps the most possible sample per bin,
// recorded at its exact value; lower-bounds event_profile pointwise.
PossibilityProfile oracle_profile(const WeightedConditionalSet& w, const Event& a,
                                  std::size_t resolution);

} // namespace credal

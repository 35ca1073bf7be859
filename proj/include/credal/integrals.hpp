#pragma once

#include <utility>
#include <vector>

#include "credal/conditioning.hpp"
#include "credal/core.hpp"

namespace credal {

/// Finite possibility distribution over conditional probability values:
/// the supremum possibility must be 1 within kProbTol.
struct WeightedValueList {
    struct Entry {
        double value = 0.0;       // conditional probability in [0,1]
        double possibility = 0.0; // in (0,1]
    };
    std::vector<Entry> entries;
};

// Normalized extreme conditionals with their possibilities: the
// normalized image of the unnormalized generators, deduplicated, each
// carrying the largest possibility among its preimages.
std::vector<std::pair<Distribution, double>> nextr(const WeightedConditionalSet& w);

// Value list for one event: (P(a|given), possibility) per Nextr element.
WeightedValueList nextr_value_list(const WeightedConditionalSet& w, const Event& a);

// Choquet integral of the value list with respect to the possibility
// measure: integral over level alpha of the max possibility among
// entries with value >= alpha.
double choquet_possibility(const WeightedValueList& l);

// Choquet integral with respect to the dual necessity measure.
double choquet_necessity(const WeightedValueList& l);

// Bottom-up accumulation over possibility levels; equals
// choquet_possibility exactly.
double choquet_upper_scan(const WeightedValueList& l);

// Sugeno integrals: max of min(value, possibility), and the dual
// inf over alpha of max(necessity of the level set, alpha).
double sugeno_possibility(const WeightedValueList& l);
double sugeno_necessity(const WeightedValueList& l);

// Interval extraction over the normalized extreme conditionals.
UncertaintyInterval choquet_extreme_interval(const WeightedConditionalSet& w,
                                             const Event& a);
UncertaintyInterval sugeno_extreme_interval(const WeightedConditionalSet& w,
                                            const Event& a);

// Interval extraction over the full conditional convex set: the upper
// Choquet value is the exact integral of the level-wise upper envelope
// (piecewise constant and hyperbolic along hull edges); the upper Sugeno
// value comes from the Pareto frontier of (value, possibility) pairs.
// Lower values follow by duality on the complement event.
UncertaintyInterval choquet_full_interval(const WeightedConditionalSet& w,
                                          const Event& a);
UncertaintyInterval sugeno_full_interval(const WeightedConditionalSet& w,
                                         const Event& a);

} // namespace credal

#pragma once

#include <utility>
#include <vector>

#include "credal/core.hpp"

namespace credal {

/// Result of possibility-weighted conditioning: unnormalized restrictions
/// of the credal generators to the conditioning event. The total mass of
/// each generator, divided by the largest total `r_max`, is the
/// possibility of the induced conditional distribution.
class WeightedConditionalSet {
  public:
    // Zero-total generators are dropped; every generator must be
    // supported inside `given` and at least one must survive.
    WeightedConditionalSet(Event given, std::vector<SubDistribution> generators);

    const FramePtr& frame() const { return given_.frame(); }
    const Event& given() const { return given_; }
    const std::vector<SubDistribution>& generators() const { return generators_; }
    double r_max() const { return r_max_; }

    // total_i / r_max per generator, each in (0,1], max equal to 1.
    std::vector<double> possibilities() const;

  private:
    Event given_;
    std::vector<SubDistribution> generators_;
    double r_max_;
};

/// Possibility-over-probability curve for one event: exact anchors at the
/// generator-induced breakpoints plus a uniform sample grid.
struct PossibilityProfile {
    std::vector<std::pair<double, double>> anchors; // (x, pi)
    std::vector<std::pair<double, double>> samples; // (x, pi)
};

// Dempster (focusing) rule: keep only the generators attaining the
// maximum probability of `b` (ties within kProbTol), then normalize.
CredalSet dempster_condition(const CredalSet& c, const Event& b);

// Closed forms Pl1 = Pl(a&b)/Pl(b), Bel1 = (Pl(b) - Pl(b-a))/Pl(b).
UncertaintyInterval dempster_interval(const MassAssignment& m, const Event& a,
                                      const Event& b);

// Robust rule: condition every generator with positive mass on `b`.
CredalSet robust_condition(const CredalSet& c, const Event& b);

// Closed forms Pl2 = Pl(a&b)/(Pl(a&b)+Bel(b-a)),
// Bel2 = Bel(a&b)/(Bel(a&b)+Pl(b-a)).
UncertaintyInterval robust_interval_closed(const MassAssignment& m, const Event& a,
                                           const Event& b);

// [min, max] of P(a|b) over the surviving generators.
UncertaintyInterval robust_interval(const CredalSet& c, const Event& a,
                                    const Event& b);

// Restricts every generator to `b` without normalizing, drops zero-total
// results and canonicalizes the rest in unnormalized space.
WeightedConditionalSet possibility_condition(const CredalSet& c, const Event& b);

// Possibility of observing conditional probability `x` for event `a`:
// the largest normalizing factor on the ray t = x * r through the hull
// of the generator projections, divided by r_max. Zero off the hull.
double profile_possibility(const WeightedConditionalSet& w, const Event& a, double x);

PossibilityProfile event_profile(const WeightedConditionalSet& w, const Event& a,
                                 std::size_t resolution);

} // namespace credal

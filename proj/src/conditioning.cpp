#include "credal/conditioning.hpp"

#include <algorithm>
#include <cmath>

#include "credal/geometry.hpp"

namespace credal {

WeightedConditionalSet::WeightedConditionalSet(Event given,
                                               std::vector<SubDistribution> generators)
    : given_(std::move(given)) {
    Event outside = given_.complement();
    for (auto& g : generators) {
        require_same_frame(given_.frame(), g.frame(), "weighted conditional set");
        if (g.mass(outside) > kGeomTol)
            throw invalid_model("generator carries mass outside the conditioning event");
        if (g.total() > kGeomTol)
            generators_.push_back(std::move(g));
    }
    if (generators_.empty())
        throw conditioning_impossible("all generators have zero mass on the conditioning event");
    r_max_ = 0.0;
    for (const auto& g : generators_)
        r_max_ = std::max(r_max_, g.total());
}

std::vector<double> WeightedConditionalSet::possibilities() const {
    std::vector<double> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_)
        out.push_back(g.total() / r_max_);
    return out;
}

namespace {

SubDistribution restrict(const Distribution& p, const Event& b) {
    std::vector<double> w(p.weights());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!b.contains(i))
            w[i] = 0.0;
    return SubDistribution(p.frame(), std::move(w));
}

} // namespace

CredalSet dempster_condition(const CredalSet& c, const Event& b) {
    require_same_frame(c.frame(), b.frame(), "dempster_condition");
    double pmax = upper_probability(c, b);
    if (pmax <= kGeomTol)
        throw conditioning_impossible("conditioning event has zero upper probability");
    std::vector<Distribution> conditioned;
    for (const auto& g : c.generators())
        if (g.probability(b) >= pmax - kProbTol)
            conditioned.push_back(restrict(g, b).normalized());
    return extreme_filter(conditioned);
}

UncertaintyInterval dempster_interval(const MassAssignment& m, const Event& a,
                                      const Event& b) {
    double pl_b = plausibility(m, b);
    if (pl_b <= kGeomTol)
        throw conditioning_impossible("conditioning event has zero plausibility");
    double upper = plausibility(m, a.intersect(b)) / pl_b;
    double lower = (pl_b - plausibility(m, b.minus(a))) / pl_b;
    return make_interval(lower, upper);
}

CredalSet robust_condition(const CredalSet& c, const Event& b) {
    require_same_frame(c.frame(), b.frame(), "robust_condition");
    std::vector<Distribution> conditioned;
    for (const auto& g : c.generators())
        if (g.probability(b) > kGeomTol)
            conditioned.push_back(restrict(g, b).normalized());
    if (conditioned.empty())
        throw conditioning_impossible("no generator has positive mass on the conditioning event");
    return extreme_filter(conditioned);
}

UncertaintyInterval robust_interval_closed(const MassAssignment& m, const Event& a,
                                           const Event& b) {
    if (plausibility(m, b) <= kGeomTol)
        throw conditioning_impossible("conditioning event has zero plausibility");
    double pl_ab = plausibility(m, a.intersect(b));
    double bel_ba = belief(m, b.minus(a));
    double upper = (pl_ab + bel_ba > kGeomTol) ? pl_ab / (pl_ab + bel_ba) : 0.0;
    double bel_ab = belief(m, a.intersect(b));
    double pl_ba = plausibility(m, b.minus(a));
    // A zero denominator means all mass reaching b stays inside a.
    double lower = (bel_ab + pl_ba > kGeomTol) ? bel_ab / (bel_ab + pl_ba) : 1.0;
    return make_interval(lower, upper);
}

UncertaintyInterval robust_interval(const CredalSet& c, const Event& a,
                                    const Event& b) {
    require_same_frame(c.frame(), b.frame(), "robust_interval");
    Event ab = a.intersect(b);
    double lo = 1.0, hi = 0.0;
    bool any = false;
    for (const auto& g : c.generators()) {
        double pb = g.probability(b);
        if (pb <= kGeomTol)
            continue;
        double v = g.probability(ab) / pb;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        any = true;
    }
    if (!any)
        throw conditioning_impossible("no generator has positive mass on the conditioning event");
    return make_interval(lo, hi);
}

WeightedConditionalSet possibility_condition(const CredalSet& c, const Event& b) {
    require_same_frame(c.frame(), b.frame(), "possibility_condition");
    std::vector<SubDistribution> restricted;
    std::vector<std::vector<double>> raw;
    for (const auto& g : c.generators()) {
        SubDistribution s = restrict(g, b);
        if (s.total() <= kGeomTol)
            continue;
        raw.push_back(s.weights());
        restricted.push_back(std::move(s));
    }
    if (restricted.empty())
        throw conditioning_impossible("conditioning event has zero upper probability");
    // Canonicalize in unnormalized space: the possibility of a conditional
    // is the supremum over its preimages, realized by keeping extremes only.
    std::vector<SubDistribution> kept;
    for (std::size_t i : extreme_point_indices(raw, kProbTol))
        kept.push_back(restricted[i]);
    return WeightedConditionalSet(b, std::move(kept));
}

namespace {

std::vector<Point2> project(const WeightedConditionalSet& w, const Event& a) {
    Event target = a.intersect(w.given());
    std::vector<Point2> pts;
    pts.reserve(w.generators().size());
    for (const auto& g : w.generators())
        pts.push_back({g.total(), g.mass(target)});
    return pts;
}

} // namespace

double profile_possibility(const WeightedConditionalSet& w, const Event& a, double x) {
    require_same_frame(w.frame(), a.frame(), "profile_possibility");
    std::vector<Point2> hull = convex_hull(project(w, a));
    double r = ray_max_abscissa(hull, x);
    if (r < 0.0)
        return 0.0;
    return std::min(r / w.r_max(), 1.0);
}

PossibilityProfile event_profile(const WeightedConditionalSet& w, const Event& a,
                                 std::size_t resolution) {
    require_same_frame(w.frame(), a.frame(), "event_profile");
    PossibilityProfile profile;
    Event target = a.intersect(w.given());
    for (const auto& g : w.generators())
        profile.anchors.push_back({g.mass(target) / g.total(), g.total() / w.r_max()});
    std::sort(profile.anchors.begin(), profile.anchors.end());

    std::vector<Point2> hull = convex_hull(project(w, a));
    for (std::size_t j = 0; j <= resolution; ++j) {
        double x = static_cast<double>(j) / static_cast<double>(resolution);
        double r = ray_max_abscissa(hull, x);
        double pi = (r < 0.0) ? 0.0 : std::min(r / w.r_max(), 1.0);
        profile.samples.push_back({x, pi});
    }
    return profile;
}

} // namespace credal

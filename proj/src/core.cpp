#include "credal/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "credal/geometry.hpp"

namespace credal {

Frame::Frame(std::vector<std::string> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty())
        throw invalid_model("frame needs at least one outcome");
    std::set<std::string> seen;
    for (const auto& o : outcomes_) {
        if (o.empty())
            throw invalid_model("frame outcome labels must be non-empty");
        if (!seen.insert(o).second)
            throw invalid_model("duplicate outcome label: " + o);
    }
}

std::size_t Frame::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
        if (outcomes_[i] == label)
            return i;
    throw unknown_outcome("outcome not in frame: " + label);
}

FramePtr make_frame(std::vector<std::string> outcomes) {
    return std::make_shared<Frame>(std::move(outcomes));
}

void require_same_frame(const FramePtr& a, const FramePtr& b, const char* what) {
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw frame_mismatch(std::string("frame mismatch in ") + what);
}

Event::Event(FramePtr frame, const std::vector<std::string>& members)
    : frame_(std::move(frame)), mask_(frame_->size(), false) {
    for (const auto& label : members)
        mask_[frame_->index_of(label)] = true;
}

Event::Event(FramePtr frame, std::vector<bool> mask)
    : frame_(std::move(frame)), mask_(std::move(mask)) {
    if (mask_.size() != frame_->size())
        throw invalid_model("event mask length does not match frame");
}

std::size_t Event::count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<std::string> Event::members() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i])
            out.push_back(frame_->label(i));
    return out;
}

Event Event::complement() const {
    std::vector<bool> m(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i)
        m[i] = !mask_[i];
    return Event(frame_, std::move(m));
}

Event Event::intersect(const Event& other) const {
    require_same_frame(frame_, other.frame_, "event intersection");
    std::vector<bool> m(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i)
        m[i] = mask_[i] && other.mask_[i];
    return Event(frame_, std::move(m));
}

Event Event::minus(const Event& other) const {
    require_same_frame(frame_, other.frame_, "event difference");
    std::vector<bool> m(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i)
        m[i] = mask_[i] && !other.mask_[i];
    return Event(frame_, std::move(m));
}

bool Event::subset_of(const Event& other) const {
    require_same_frame(frame_, other.frame_, "event inclusion");
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && !other.mask_[i])
            return false;
    return true;
}

bool Event::intersects(const Event& other) const {
    require_same_frame(frame_, other.frame_, "event intersection test");
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && other.mask_[i])
            return true;
    return false;
}

namespace {

void check_weights(const FramePtr& frame, const std::vector<double>& w) {
    if (w.size() != frame->size())
        throw invalid_model("weight vector length does not match frame");
    for (double v : w)
        if (v < -kProbTol)
            throw invalid_model("negative weight");
}

double sum_over(const std::vector<double>& w, const Event& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (a.contains(i))
            s += w[i];
    return s;
}

} // namespace

Distribution::Distribution(FramePtr frame, std::vector<double> weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
    check_weights(frame_, weights_);
    double s = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(s - 1.0) > kProbTol)
        throw invalid_model("distribution weights do not sum to 1");
    for (double& v : weights_)
        v = std::max(v, 0.0);
}

double Distribution::probability(const Event& a) const {
    require_same_frame(frame_, a.frame(), "probability");
    return sum_over(weights_, a);
}

SubDistribution::SubDistribution(FramePtr frame, std::vector<double> weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
    check_weights(frame_, weights_);
    for (double& v : weights_)
        v = std::max(v, 0.0);
    total_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (total_ > 1.0 + kProbTol)
        throw invalid_model("sub-distribution total exceeds 1");
}

double SubDistribution::mass(const Event& a) const {
    require_same_frame(frame_, a.frame(), "mass");
    return sum_over(weights_, a);
}

Distribution SubDistribution::normalized() const {
    if (total_ <= kGeomTol)
        throw conditioning_impossible("cannot normalize a zero-total sub-distribution");
    std::vector<double> w(weights_);
    for (double& v : w)
        v /= total_;
    return Distribution(frame_, std::move(w));
}

CredalSet::CredalSet(std::vector<Distribution> generators, bool canonical)
    : generators_(std::move(generators)), canonical_(canonical) {
    if (generators_.empty())
        throw invalid_model("credal set needs at least one generator");
    frame_ = generators_.front().frame();
    for (const auto& g : generators_)
        require_same_frame(frame_, g.frame(), "credal set");
}

MassAssignment::MassAssignment(FramePtr frame, std::vector<std::pair<Event, double>> focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {
    double s = 0.0;
    for (const auto& [e, m] : focal_) {
        require_same_frame(frame_, e.frame(), "mass assignment");
        if (e.empty())
            throw invalid_model("empty focal element");
        if (m <= 0.0 || m > 1.0 + kProbTol)
            throw invalid_model("focal mass must lie in (0,1]");
        s += m;
    }
    if (std::abs(s - 1.0) > kProbTol)
        throw invalid_model("focal masses do not sum to 1");
    for (std::size_t i = 0; i < focal_.size(); ++i)
        for (std::size_t j = i + 1; j < focal_.size(); ++j)
            if (focal_[i].first.subset_of(focal_[j].first) &&
                focal_[j].first.subset_of(focal_[i].first))
                throw invalid_model("duplicate focal element");
}

UncertaintyInterval make_interval(double lower, double upper) {
    lower = std::min(std::max(lower, 0.0), 1.0);
    upper = std::min(std::max(upper, 0.0), 1.0);
    if (lower > upper + kProbTol)
        throw error("interval lower bound exceeds upper bound");
    if (lower > upper)
        lower = upper;
    return {lower, upper};
}

double belief(const MassAssignment& m, const Event& a) {
    require_same_frame(m.frame(), a.frame(), "belief");
    double s = 0.0;
    for (const auto& [e, w] : m.focal_elements())
        if (e.subset_of(a))
            s += w;
    return s;
}

double plausibility(const MassAssignment& m, const Event& a) {
    require_same_frame(m.frame(), a.frame(), "plausibility");
    double s = 0.0;
    for (const auto& [e, w] : m.focal_elements())
        if (e.intersects(a))
            s += w;
    return s;
}

CredalSet extreme_filter(const std::vector<Distribution>& points) {
    if (points.empty())
        throw invalid_model("extreme_filter needs a non-empty point list");
    FramePtr frame = points.front().frame();
    std::vector<std::vector<double>> raw;
    raw.reserve(points.size());
    for (const auto& p : points) {
        require_same_frame(frame, p.frame(), "extreme_filter");
        raw.push_back(p.weights());
    }
    std::vector<Distribution> kept;
    for (std::size_t i : extreme_point_indices(raw, kProbTol))
        kept.push_back(points[i]);
    return CredalSet(std::move(kept), true);
}

CredalSet credal_from_mass(const MassAssignment& m) {
    const auto& frame = m.frame();
    const std::size_t n = frame->size();

    std::vector<std::vector<std::size_t>> choices; // member indices per focal
    std::vector<double> masses;
    double combos = 1.0;
    for (const auto& [e, w] : m.focal_elements()) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (e.contains(i))
                members.push_back(i);
        combos *= static_cast<double>(members.size());
        choices.push_back(std::move(members));
        masses.push_back(w);
    }
    if (combos > 1e6)
        throw enumeration_too_large("mass allocation enumeration exceeds 10^6");

    std::vector<std::vector<double>> pts;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<double> w(n, 0.0);
        for (std::size_t f = 0; f < choices.size(); ++f)
            w[choices[f][pick[f]]] += masses[f];
        pts.push_back(std::move(w));

        std::size_t f = 0;
        while (f < choices.size() && ++pick[f] == choices[f].size()) {
            pick[f] = 0;
            ++f;
        }
        if (f == choices.size())
            break;
    }

    std::vector<Distribution> gens;
    for (std::size_t i : extreme_point_indices(pts, kProbTol))
        gens.emplace_back(frame, pts[i]);
    return CredalSet(std::move(gens), true);
}

double upper_probability(const CredalSet& c, const Event& a) {
    require_same_frame(c.frame(), a.frame(), "upper_probability");
    double best = 0.0;
    for (const auto& g : c.generators())
        best = std::max(best, g.probability(a));
    return best;
}

double lower_probability(const CredalSet& c, const Event& a) {
    require_same_frame(c.frame(), a.frame(), "lower_probability");
    double best = 1.0;
    for (const auto& g : c.generators())
        best = std::min(best, g.probability(a));
    return best;
}

} // namespace credal

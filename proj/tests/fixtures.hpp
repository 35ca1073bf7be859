#pragma once

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "credal/conditioning.hpp"
#include "credal/core.hpp"

namespace fixtures {

using namespace credal;

inline FramePtr urn_frame() {
    return make_frame({"u1r", "u1w", "u2r", "u2w"});
}

inline FramePtr ball_frame() {
    return make_frame({"r", "w", "b"});
}

inline Event ev(const FramePtr& f, std::vector<std::string> labels) {
    return Event(f, labels);
}

// Two urns, 999/1 and 1/999 red/white balls; unknown urn selection.
inline CredalSet example1_credal(const FramePtr& f) {
    return CredalSet({Distribution(f, {0.999, 0.001, 0.0, 0.0}),
                      Distribution(f, {0.0, 0.0, 0.001, 0.999})});
}

// Urn with 10 red, 10 white and 20 red-or-black balls.
inline MassAssignment example2_mass(const FramePtr& f) {
    return MassAssignment(f, {{Event(f, {"r"}), 0.25},
                              {Event(f, {"w"}), 0.25},
                              {Event(f, {"r", "b"}), 0.5}});
}

inline CredalSet example2_credal(const FramePtr& f) {
    return credal_from_mass(example2_mass(f));
}

inline CredalSet modified_example2_credal(const FramePtr& f) {
    return CredalSet({Distribution(f, {1.0 / 3, 1.0 / 3, 1.0 / 3}),
                      Distribution(f, {0.0, 1.0 / 3, 2.0 / 3})});
}

inline WeightedConditionalSet example3_set(const FramePtr& f) {
    return possibility_condition(example1_credal(f), Event(f, {"u1r", "u2r"}));
}

inline WeightedConditionalSet example4_set(const FramePtr& f) {
    return possibility_condition(example2_credal(f), Event(f, {"r", "w"}));
}

inline WeightedConditionalSet modified_example2_set(const FramePtr& f) {
    return possibility_condition(modified_example2_credal(f), Event(f, {"r", "w"}));
}

// Example 3 generators plus the interior point normalizing to (0.5, 0.5)
// with possibility 0.002; built directly so it is not filtered away.
inline WeightedConditionalSet example3_with_midpoint(const FramePtr& f) {
    Event red(f, {"u1r", "u2r"});
    return WeightedConditionalSet(
        red, {SubDistribution(f, {0.999, 0.0, 0.0, 0.0}),
              SubDistribution(f, {0.0, 0.0, 0.001, 0.0}),
              SubDistribution(f, {0.000999, 0.0, 0.000999, 0.0})});
}

// The same point nudged off the segment so it becomes a true extreme point.
inline WeightedConditionalSet example3_epsilon(const FramePtr& f, double eps = 1e-6) {
    Event red(f, {"u1r", "u2r"});
    return WeightedConditionalSet(
        red, {SubDistribution(f, {0.999, 0.0, 0.0, 0.0}),
              SubDistribution(f, {0.0, 0.0, 0.001, 0.0}),
              SubDistribution(f, {0.000999 + eps, 0.0, 0.000999 - eps, 0.0})});
}

inline CredalSet singleton_credal(const FramePtr& f, std::vector<double> w) {
    return CredalSet({Distribution(f, std::move(w))});
}

inline bool same_generators(const CredalSet& c,
                            std::vector<std::vector<double>> expected,
                            double tol = 1e-9) {
    if (c.generators().size() != expected.size())
        return false;
    std::vector<bool> used(expected.size(), false);
    for (const auto& g : c.generators()) {
        bool found = false;
        for (std::size_t i = 0; i < expected.size() && !found; ++i) {
            if (used[i])
                continue;
            bool same = true;
            for (std::size_t j = 0; j < expected[i].size(); ++j)
                if (std::abs(g.weights()[j] - expected[i][j]) > tol) {
                    same = false;
                    break;
                }
            if (same) {
                used[i] = true;
                found = true;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

// Random belief function on a frame of 2..5 outcomes with up to 6 focal
// elements; allocation product kept small so enumeration stays cheap.
inline MassAssignment random_mass(std::mt19937& rng, FramePtr& frame_out) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("o" + std::to_string(i + 1));
    frame_out = make_frame(labels);

    std::uniform_int_distribution<int> kd(1, 6);
    const int k = kd(rng);
    std::uniform_int_distribution<unsigned> md(1, (1u << n) - 1);
    std::set<unsigned> used;
    std::vector<Event> events;
    double product = 1.0;
    for (int i = 0; i < k; ++i) {
        for (int tries = 0; tries < 64; ++tries) {
            unsigned mask = md(rng);
            int size = __builtin_popcount(mask);
            if (used.count(mask) || product * size > 300.0)
                continue;
            used.insert(mask);
            product *= size;
            std::vector<bool> bits(n);
            for (int j = 0; j < n; ++j)
                bits[j] = (mask >> j) & 1u;
            events.emplace_back(frame_out, bits);
            break;
        }
    }
    if (events.empty())
        events.emplace_back(frame_out, std::vector<bool>(n, true));

    std::uniform_real_distribution<double> wd(0.05, 1.0);
    std::vector<double> masses(events.size());
    double sum = 0.0;
    for (double& m : masses) {
        m = wd(rng);
        sum += m;
    }
    std::vector<std::pair<Event, double>> focal;
    for (std::size_t i = 0; i < events.size(); ++i)
        focal.push_back({events[i], masses[i] / sum});
    return MassAssignment(frame_out, std::move(focal));
}

// All non-empty events of a small frame.
inline std::vector<Event> all_events(const FramePtr& f, bool include_empty = false) {
    const std::size_t n = f->size();
    std::vector<Event> out;
    for (unsigned mask = include_empty ? 0 : 1; mask < (1u << n); ++mask) {
        std::vector<bool> bits(n);
        for (std::size_t j = 0; j < n; ++j)
            bits[j] = (mask >> j) & 1u;
        out.emplace_back(f, bits);
    }
    return out;
}

} // namespace fixtures

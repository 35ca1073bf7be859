#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

// Probability identities and duplicate detection use kProbTol,
// geometric degeneracy checks (collinearity, zero pivots) use kGeomTol.
inline constexpr double kProbTol = 1e-9;
inline constexpr double kGeomTol = 1e-12;

/// Finite universe of outcomes. Labels are pairwise distinct and non-empty.
class Frame {
  public:
    explicit Frame(std::vector<std::string> outcomes);

    std::size_t size() const { return outcomes_.size(); }
    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::string& label(std::size_t i) const { return outcomes_[i]; }
    std::size_t index_of(const std::string& label) const; // throws unknown_outcome

    friend bool operator==(const Frame& a, const Frame& b) {
        return a.outcomes_ == b.outcomes_;
    }

  private:
    std::vector<std::string> outcomes_;
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(std::vector<std::string> outcomes);

// Throws frame_mismatch unless both frames have identical outcome lists.
void require_same_frame(const FramePtr& a, const FramePtr& b, const char* what);

/// Subset of a frame's outcomes.
class Event {
  public:
    Event(FramePtr frame, const std::vector<std::string>& members);
    Event(FramePtr frame, std::vector<bool> mask);
    // Disambiguates brace lists of labels from the mask overload.
    Event(FramePtr frame, std::initializer_list<std::string> members)
        : Event(std::move(frame), std::vector<std::string>(members)) {}

    const FramePtr& frame() const { return frame_; }
    bool contains(std::size_t i) const { return mask_[i]; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<std::string> members() const;

    Event complement() const;
    Event intersect(const Event& other) const;
    Event minus(const Event& other) const;
    bool subset_of(const Event& other) const;
    bool intersects(const Event& other) const;

  private:
    FramePtr frame_;
    std::vector<bool> mask_;
};

/// Normalized probability distribution: non-negative weights summing to 1
/// within kProbTol.
class Distribution {
  public:
    Distribution(FramePtr frame, std::vector<double> weights);

    const FramePtr& frame() const { return frame_; }
    const std::vector<double>& weights() const { return weights_; }
    double probability(const Event& a) const;

  private:
    FramePtr frame_;
    std::vector<double> weights_;
};

/// Unnormalized restriction of a distribution: non-negative weights with
/// total at most 1. `total()` is the retained (normalizing) mass.
class SubDistribution {
  public:
    SubDistribution(FramePtr frame, std::vector<double> weights);

    const FramePtr& frame() const { return frame_; }
    const std::vector<double>& weights() const { return weights_; }
    double total() const { return total_; }
    double mass(const Event& a) const;
    Distribution normalized() const; // throws conditioning_impossible on ~0 total

  private:
    FramePtr frame_;
    std::vector<double> weights_;
    double total_;
};

/// Convex set of probability distributions stored by a finite generator
/// list; the convex hull is implied. When `canonical` is set the
/// generators are exactly the deduplicated extreme points.
class CredalSet {
  public:
    CredalSet(std::vector<Distribution> generators, bool canonical = false);

    const FramePtr& frame() const { return frame_; }
    const std::vector<Distribution>& generators() const { return generators_; }
    bool canonical() const { return canonical_; }

  private:
    FramePtr frame_;
    std::vector<Distribution> generators_;
    bool canonical_;
};

/// Basic probability assignment: focal events with masses in (0,1]
/// summing to 1.
class MassAssignment {
  public:
    MassAssignment(FramePtr frame, std::vector<std::pair<Event, double>> focal);

    const FramePtr& frame() const { return frame_; }
    const std::vector<std::pair<Event, double>>& focal_elements() const {
        return focal_;
    }

  private:
    FramePtr frame_;
    std::vector<std::pair<Event, double>> focal_;
};

/// [lower, upper] pair with 0 <= lower <= upper <= 1.
struct UncertaintyInterval {
    double lower = 0.0;
    double upper = 0.0;
};

// Clamps floating-point dust outside [0,1] and checks the ordering.
UncertaintyInterval make_interval(double lower, double upper);

double belief(const MassAssignment& m, const Event& a);
double plausibility(const MassAssignment& m, const Event& a);

// Enumerates every allocation of each focal element's mass to a single
// member, deduplicates and keeps the extreme points. Rejects inputs with
// more than 10^6 allocations.
CredalSet credal_from_mass(const MassAssignment& m);

// Drops duplicates and every point that is a convex combination of the
// remaining ones; the convex hull is unchanged and the result canonical.
CredalSet extreme_filter(const std::vector<Distribution>& points);

double upper_probability(const CredalSet& c, const Event& a);
double lower_probability(const CredalSet& c, const Event& a);

} // namespace credal

#include "credal/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace credal {

namespace {

double composition_count(std::size_t n, std::size_t k) {
    // C(n + k - 1, k - 1)
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i)
        c = c * static_cast<double>(n + i) / static_cast<double>(i);
    return c;
}

} // namespace

std::vector<std::pair<double, double>>
grid_points(const WeightedConditionalSet& w, const Event& a, std::size_t resolution) {
    require_same_frame(w.frame(), a.frame(), "grid_points");
    if (resolution == 0)
        throw resolution_too_high("resolution must be positive");
    const std::size_t k = w.generators().size();
    if (composition_count(resolution, k) > 1e7)
        throw resolution_too_high("simplex grid exceeds 10^7 combinations");

    Event target = a.intersect(w.given());
    std::vector<double> rs, ts;
    for (const auto& g : w.generators()) {
        rs.push_back(g.total());
        ts.push_back(g.mass(target));
    }

    std::vector<std::pair<double, double>> out;
    const double inv = 1.0 / static_cast<double>(resolution);
    // Enumerate integer compositions of `resolution` into k parts.
    std::vector<double> r_part(k + 1, 0.0), t_part(k + 1, 0.0);
    auto recurse = [&](auto&& self, std::size_t depth, std::size_t rest) -> void {
        if (depth + 1 == k) {
            double r = r_part[depth] + static_cast<double>(rest) * rs[depth];
            double t = t_part[depth] + static_cast<double>(rest) * ts[depth];
            r *= inv;
            t *= inv;
            if (r > kGeomTol)
                out.push_back({r / w.r_max(), t / r});
            return;
        }
        for (std::size_t use = 0; use <= rest; ++use) {
            r_part[depth + 1] = r_part[depth] + static_cast<double>(use) * rs[depth];
            t_part[depth + 1] = t_part[depth] + static_cast<double>(use) * ts[depth];
            self(self, depth + 1, rest - use);
        }
    };
    if (k == 1) {
        out.push_back({1.0, ts[0] / rs[0]});
    } else {
        recurse(recurse, 0, resolution);
    }
    return out;
}

double oracle_upper_choquet(const WeightedConditionalSet& w, const Event& a,
                            std::size_t resolution) {
    auto pts = grid_points(w, a, resolution);
    std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
        return p.first > q.first; // possibility descending
    });
    std::vector<double> prefix_max(pts.size());
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        best = std::max(best, pts[i].second);
        prefix_max[i] = best;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < resolution; ++j) {
        double beta = (static_cast<double>(j) + 0.5) / static_cast<double>(resolution);
        // samples with possibility >= beta form a prefix
        std::size_t lo = 0, hi = pts.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (pts[mid].first >= beta)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo > 0)
            sum += prefix_max[lo - 1];
    }
    return sum / static_cast<double>(resolution);
}

double oracle_upper_sugeno(const WeightedConditionalSet& w, const Event& a,
                           std::size_t resolution) {
    double best = 0.0;
    for (const auto& [pi, v] : grid_points(w, a, resolution))
        best = std::max(best, std::min(pi, v));
    return best;
}

PossibilityProfile oracle_profile(const WeightedConditionalSet& w, const Event& a,
                                  std::size_t resolution) {
    auto pts = grid_points(w, a, resolution);
    // Per value bin, the most possible sample at its exact value.
    std::vector<std::pair<double, double>> bins(resolution + 1, {-1.0, -1.0});
    for (const auto& [pi, v] : pts) {
        auto idx = static_cast<std::size_t>(
            std::min(v, 1.0) * static_cast<double>(resolution));
        idx = std::min(idx, resolution);
        if (pi > bins[idx].second)
            bins[idx] = {v, pi};
    }
    PossibilityProfile profile;
    for (const auto& [x, pi] : bins)
        if (pi >= 0.0)
            profile.samples.push_back({x, pi});
    std::sort(profile.samples.begin(), profile.samples.end());
    return profile;
}

} // namespace credal

#include "credal/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "credal/geometry.hpp"

namespace credal {

namespace {

void check_list(const WeightedValueList& l) {
    if (l.entries.empty())
        throw invalid_model("empty weighted value list");
    double pi_max = 0.0;
    for (const auto& e : l.entries) {
        if (e.value < -kProbTol || e.value > 1.0 + kProbTol)
            throw invalid_model("value outside [0,1]");
        if (e.possibility < -kProbTol || e.possibility > 1.0 + kProbTol)
            throw invalid_model("possibility outside [0,1]");
        pi_max = std::max(pi_max, e.possibility);
    }
    if (std::abs(pi_max - 1.0) > kProbTol)
        throw invalid_model("maximum possibility must be 1");
}

std::vector<WeightedValueList::Entry> sorted_desc(const WeightedValueList& l) {
    auto e = l.entries;
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
        return a.value > b.value;
    });
    return e;
}

} // namespace

std::vector<std::pair<Distribution, double>> nextr(const WeightedConditionalSet& w) {
    std::vector<std::pair<Distribution, double>> out;
    for (const auto& g : w.generators()) {
        Distribution p = g.normalized();
        double pi = g.total() / w.r_max();
        bool merged = false;
        for (auto& [q, qpi] : out) {
            bool same = true;
            for (std::size_t i = 0; i < p.weights().size(); ++i)
                if (std::abs(p.weights()[i] - q.weights()[i]) >= kProbTol) {
                    same = false;
                    break;
                }
            if (same) { // Sup over preimages
                qpi = std::max(qpi, pi);
                merged = true;
                break;
            }
        }
        if (!merged)
            out.push_back({std::move(p), pi});
    }
    return out;
}

WeightedValueList nextr_value_list(const WeightedConditionalSet& w, const Event& a) {
    require_same_frame(w.frame(), a.frame(), "nextr_value_list");
    WeightedValueList l;
    for (const auto& [p, pi] : nextr(w))
        l.entries.push_back({p.probability(a), pi});
    return l;
}

double choquet_possibility(const WeightedValueList& l) {
    check_list(l);
    auto e = sorted_desc(l);
    double integral = 0.0;
    double pi_max = 0.0;
    std::size_t i = 0;
    while (i < e.size()) {
        double v = e[i].value;
        while (i < e.size() && e[i].value == v) {
            pi_max = std::max(pi_max, e[i].possibility);
            ++i;
        }
        double next_v = (i < e.size()) ? e[i].value : 0.0;
        integral += (v - next_v) * pi_max; // level set {g >= alpha}, alpha in (next_v, v]
    }
    return integral;
}

double choquet_necessity(const WeightedValueList& l) {
    check_list(l);
    auto e = sorted_desc(l);
    const std::size_t n = e.size();
    std::vector<double> suffix(n + 1, 0.0); // max possibility among entries after i
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = std::max(suffix[i + 1], e[i].possibility);
    double integral = 0.0;
    std::size_t i = 0;
    while (i < n) {
        double v = e[i].value;
        while (i < n && e[i].value == v)
            ++i;
        double next_v = (i < n) ? e[i].value : 0.0;
        integral += (v - next_v) * (1.0 - suffix[i]); // N = 1 - Pi({g < alpha})
    }
    return integral;
}

double choquet_upper_scan(const WeightedValueList& l) {
    check_list(l);
    double level = 0.0;
    double acc = 0.0;
    while (level < 1.0) {
        int best = -1;
        for (std::size_t i = 0; i < l.entries.size(); ++i) {
            const auto& e = l.entries[i];
            if (e.possibility <= level)
                continue; // zero-width step
            if (best < 0 || e.value > l.entries[best].value ||
                (e.value == l.entries[best].value &&
                 e.possibility > l.entries[best].possibility))
                best = static_cast<int>(i);
        }
        if (best < 0)
            break;
        acc += (l.entries[best].possibility - level) * l.entries[best].value;
        level = l.entries[best].possibility;
    }
    return acc;
}

double sugeno_possibility(const WeightedValueList& l) {
    check_list(l);
    double best = 0.0;
    for (const auto& e : l.entries)
        best = std::max(best, std::min(e.value, e.possibility));
    return best;
}

double sugeno_necessity(const WeightedValueList& l) {
    check_list(l);
    auto e = sorted_desc(l); // descending values
    const std::size_t n = e.size();
    // Candidate infima of max(N({g >= alpha}), alpha) at the left endpoint
    // of each constancy interval of the level-set necessity.
    std::vector<double> values;  // distinct, ascending
    std::vector<double> prefix;  // max possibility among entries with value <= values[i]
    for (std::size_t i = n; i-- > 0;) {
        if (values.empty() || e[i].value != values.back()) {
            values.push_back(e[i].value);
            prefix.push_back(e[i].possibility);
        } else {
            prefix.back() = std::max(prefix.back(), e[i].possibility);
        }
        if (prefix.size() >= 2)
            prefix.back() = std::max(prefix.back(), prefix[prefix.size() - 2]);
    }
    double best = 1.0; // alpha near 0: level set is everything, N = 1
    for (std::size_t i = 0; i < values.size(); ++i) {
        double left = (i == 0) ? 0.0 : values[i - 1];
        double nec = (i == 0) ? 1.0 : 1.0 - prefix[i - 1];
        best = std::min(best, std::max(nec, left));
    }
    if (values.back() < 1.0)
        best = std::min(best, values.back()); // alpha just above the top value
    return best;
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

// Integral of max(s, ae/phi + be) over [lo, hi]; the two branches cross
// at most once inside the piece.
double integrate_piece(double lo, double hi, double s, double ae, double be) {
    std::vector<std::pair<double, double>> segs;
    double cut = -1.0;
    if (std::abs(s - be) > kGeomTol && std::abs(ae) > kGeomTol) {
        double phi = ae / (s - be);
        if (phi > lo + kGeomTol && phi < hi - kGeomTol)
            cut = phi;
    }
    if (cut > 0.0)
        segs = {{lo, cut}, {cut, hi}};
    else
        segs = {{lo, hi}};
    double out = 0.0;
    for (auto [a, b] : segs) {
        double mid = 0.5 * (a + b);
        double edge_val = ae / mid + be;
        if (s >= edge_val)
            out += s * (b - a);
        else
            out += ae * std::log(b / a) + be * (b - a);
    }
    return out;
}

// Upper Choquet value over the full conditional set: the mean of
// c(phi) = sup{ P(a|given) : normalizing factor >= phi } over (0, r_max].
double envelope_upper(const std::vector<Point2>& proj, double r_max) {
    std::vector<Point2> vs = convex_hull(proj);
    std::sort(vs.begin(), vs.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x;
    });
    const std::size_t nv = vs.size();
    std::vector<double> suffix(nv + 1, 0.0); // best ratio among vertices with r >= vs[i].x
    for (std::size_t i = nv; i-- > 0;)
        suffix[i] = std::max(suffix[i + 1], vs[i].y / vs[i].x);

    double r_min = vs.front().x;
    double r_hi = vs.back().x;
    double integral = suffix[0] * r_min; // phi in (0, r_min]: all vertices eligible
    if (nv == 1 || r_hi - r_min <= kGeomTol)
        return std::min(std::max(integral / r_max, 0.0), 1.0);

    std::vector<Point2> chain = upper_chain(vs);
    std::vector<double> xs; // distinct vertex abscissae, ascending
    for (const auto& v : vs)
        if (xs.empty() || v.x > xs.back() + kGeomTol)
            xs.push_back(v.x);

    std::size_t edge = 0;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        double lo = xs[j];
        double hi = xs[j + 1];
        // vertex branch: no vertex abscissa lies strictly inside the piece
        std::size_t k = nv;
        for (std::size_t i = 0; i < nv; ++i)
            if (vs[i].x >= hi - kGeomTol) {
                k = i;
                break;
            }
        double s = suffix[k];
        while (edge + 2 < chain.size() && chain[edge + 1].x <= lo + kGeomTol)
            ++edge;
        const Point2& A = chain[edge];
        const Point2& B = chain[edge + 1];
        double be = (B.y - A.y) / (B.x - A.x);
        double ae = A.y - be * A.x;
        integral += integrate_piece(lo, hi, s, ae, be);
    }
    return std::min(std::max(integral / r_max, 0.0), 1.0);
}

// Upper Sugeno value over the full conditional set, from the Pareto
// frontier of (value, possibility) pairs at the hull vertices.
double sugeno_full_upper(const std::vector<Point2>& proj, double r_max) {
    std::vector<Point2> hull = convex_hull(proj);
    struct UV {
        double u, v;
    };
    std::vector<UV> s;
    for (const auto& p : hull) {
        UV q{p.y / p.x, p.x / r_max};
        bool dup = false;
        for (const auto& o : s)
            if (std::abs(o.u - q.u) <= kGeomTol && std::abs(o.v - q.v) <= kGeomTol) {
                dup = true;
                break;
            }
        if (!dup)
            s.push_back(q);
    }
    std::vector<UV> frontier;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < s.size() && !dominated; ++j)
            if (j != i && s[j].u >= s[i].u && s[j].v >= s[i].v)
                dominated = true;
        if (!dominated)
            frontier.push_back(s[i]);
    }

    bool any_gt = false, any_le = false; // u = v counts as the "u <= v" side
    for (const auto& p : frontier) {
        if (p.v < p.u - kGeomTol)
            any_gt = true;
        else
            any_le = true;
    }
    double max_u = 0.0, max_v = 0.0;
    for (const auto& p : frontier) {
        max_u = std::max(max_u, p.u);
        max_v = std::max(max_v, p.v);
    }
    if (!any_gt)
        return max_u;
    if (!any_le)
        return max_v;

    double u0 = 0.0, v1 = 0.0;
    for (const auto& p : frontier) {
        if (p.u <= p.v + kGeomTol)
            u0 = std::max(u0, p.u);
        else
            v1 = std::max(v1, p.v);
    }
    double v0 = 0.0, u1 = 0.0;
    for (const auto& p : frontier) {
        if (std::abs(p.u - u0) <= kGeomTol && p.u <= p.v + kGeomTol)
            v0 = std::max(v0, p.v);
        if (std::abs(p.v - v1) <= kGeomTol && p.v < p.u - kGeomTol)
            u1 = std::max(u1, p.u);
    }

    double qa = v1 - v0;
    double qb = u0 * v0 - u1 * v1;
    double qc = (u1 - u0) * v0 * v1;
    if (std::abs(qa) < 1e-15)
        return std::min(std::max(-qc / qb, 0.0), 1.0);
    double disc = qb * qb - 4.0 * qa * qc;
    double sq = std::sqrt(std::max(disc, 0.0));
    double roots[2] = {(-qb + sq) / (2.0 * qa), (-qb - sq) / (2.0 * qa)};
    double best = -1.0;
    for (double r : roots)
        if (r > 0.0 && (best < 0.0 || r < best))
            best = r;
    if (best < 0.0)
        throw error("no positive root in Sugeno frontier equation");
    return std::min(best, 1.0);
}

} // namespace

UncertaintyInterval choquet_extreme_interval(const WeightedConditionalSet& w,
                                             const Event& a) {
    WeightedValueList l = nextr_value_list(w, a);
    WeightedValueList lc = nextr_value_list(w, a.complement());
    double upper = choquet_upper_scan(l);
    if (std::abs(upper - choquet_possibility(l)) > 1e-12)
        throw std::logic_error("level scan disagrees with the Choquet integral");
    double lower = 1.0 - choquet_upper_scan(lc);
    if (std::abs(lower - choquet_necessity(l)) > 1e-12)
        throw std::logic_error("duality violated in Choquet lower value");
    return make_interval(lower, upper);
}

UncertaintyInterval sugeno_extreme_interval(const WeightedConditionalSet& w,
                                            const Event& a) {
    WeightedValueList l = nextr_value_list(w, a);
    WeightedValueList lc = nextr_value_list(w, a.complement());
    double upper = sugeno_possibility(l);
    double lower = 1.0 - sugeno_possibility(lc);
    if (std::abs(lower - sugeno_necessity(l)) > 1e-12)
        throw std::logic_error("duality violated in Sugeno lower value");
    return make_interval(lower, upper);
}

UncertaintyInterval choquet_full_interval(const WeightedConditionalSet& w,
                                          const Event& a) {
    require_same_frame(w.frame(), a.frame(), "choquet_full_interval");
    double upper = envelope_upper(project(w, a), w.r_max());
    double lower = 1.0 - envelope_upper(project(w, a.complement()), w.r_max());
    return make_interval(lower, upper);
}

UncertaintyInterval sugeno_full_interval(const WeightedConditionalSet& w,
                                         const Event& a) {
    require_same_frame(w.frame(), a.frame(), "sugeno_full_interval");
    double upper = sugeno_full_upper(project(w, a), w.r_max());
    double lower = 1.0 - sugeno_full_upper(project(w, a.complement()), w.r_max());
    return make_interval(lower, upper);
}

} // namespace credal

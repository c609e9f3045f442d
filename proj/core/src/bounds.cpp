#include "braidfloor/bounds.hpp"

#include <algorithm>

#include "braidfloor/burau.hpp"
#include "braidfloor/errors.hpp"

namespace braidfloor {

Rational make_rational(long numerator, long denominator) {
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational theorem_rhs(int n, long chi) {
    if (n < 2) throw invalid_braid("theorem_rhs requires n >= 2");
    return make_rational(3, 2) - make_rational(2 * chi, n + 2);
}

Rational corollary_rhs(int n, long genus) {
    if (n < 2) throw invalid_braid("corollary_rhs requires n >= 2");
    if (genus < 0) throw invalid_braid("corollary_rhs requires g >= 0");
    return make_rational(4 * genus - 2, n + 2) + make_rational(3, 2);
}

long corollary_weak_rhs(long genus) { return genus + 1; }

long floor_genus_lower(int n, long floor_value) {
    if (floor_value < 0) throw invalid_braid("floor must be non-negative");
    const Rational floor_rat(floor_value);
    long g = 0;
    while (!(floor_rat < corollary_rhs(n, g))) ++g;
    // The weak chained bound floor < g + 1 independently forces g >= floor;
    // the scan alone can report less when n >= 3 and floor = 1.
    return std::max(g, floor_value);
}

void VertexCensus::add(long a_arcs, long b_arcs, long count) {
    if (a_arcs < 0 || b_arcs < 0 || a_arcs + b_arcs < 1)
        throw invalid_braid("census keys need a >= 0, b >= 0, a + b >= 1");
    if (count < 0) throw invalid_braid("census counts are non-negative");
    if (count == 0) return;
    counts_[{a_arcs, b_arcs}] += count;
}

long VertexCensus::count(long a_arcs, long b_arcs) const {
    const auto it = counts_.find({a_arcs, b_arcs});
    return it == counts_.end() ? 0 : it->second;
}

long lemma2_residual(const VertexCensus& census, long chi) {
    const long lhs =
        2 * census.count(1, 0) + 2 * census.count(0, 2) + census.count(0, 3) - 4 * chi;
    long rhs = census.count(2, 1) + 2 * census.count(3, 0);
    for (const auto& [key, count] : census.counts()) {
        const auto [a, b] = key;
        if (a + b >= 4) rhs += (2 * a + b - 4) * count;
    }
    return lhs - rhs;
}

Rational lemma3_bound(long a_arcs, long b_arcs) {
    if (a_arcs < 0 || b_arcs < 0 || a_arcs + b_arcs < 1)
        throw invalid_braid("lemma3_bound needs a >= 0, b >= 0, a + b >= 1");
    return Rational(a_arcs) + make_rational(b_arcs, 2) - make_rational(1, 2);
}

bool VerificationReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.holds; });
}

const BoundCheck* VerificationReport::find_check(const std::string& name) const {
    for (const BoundCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names = {
        "theorem-chi", "corollary-upper", "prop1-sigma1", "bounds-order",
        "floor-lower-consistent",
    };
    return names;
}

VerificationReport verify_braid(const BraidWord& w, const ReduceOptions& options) {
    const int n = w.strands();
    VerificationReport report{.braid = w};
    report.floor = dehornoy_floor(w, options).floor;
    report.chi_lower = chi_lower_bound(w);
    const Rational floor_rat(report.floor);

    auto push = [&report](std::string name, bool strict, Rational lhs, Rational rhs) {
        const bool holds = strict ? lhs < rhs : lhs <= rhs;
        report.checks.push_back({std::move(name), holds, std::move(lhs), std::move(rhs)});
    };

    push("theorem-chi", true, floor_rat, theorem_rhs(n, report.chi_lower));

    const bool knot = closure_components(w) == 1;
    long bennequin_upper = 0;
    if (knot) {
        bennequin_upper = bennequin_genus_upper(w);
        push("corollary-upper", true, floor_rat, corollary_rhs(n, bennequin_upper));
    }

    const Sigma1Counts s1 = sigma1_counts(w);
    const long max_s1 = std::max(s1.positive, s1.negative);
    if (max_s1 >= 1) push("prop1-sigma1", true, floor_rat, Rational(max_s1));

    if (knot) {
        const long alexander_lower = alexander_genus_lower(w);
        const long floor_lower = floor_genus_lower(n, report.floor);
        push("bounds-order", false, Rational(alexander_lower), Rational(bennequin_upper));
        push("floor-lower-consistent", false, Rational(floor_lower), Rational(bennequin_upper));

        GenusBounds bounds;
        bounds.upper = bennequin_upper;
        bounds.upper_source = "bennequin-surface";
        if (floor_lower > alexander_lower) {
            bounds.lower = floor_lower;
            bounds.lower_source = "dehornoy-floor";
        } else {
            bounds.lower = alexander_lower;
            bounds.lower_source = "alexander-span";
        }
        report.genus = bounds;
    }
    return report;
}

}  // namespace braidfloor

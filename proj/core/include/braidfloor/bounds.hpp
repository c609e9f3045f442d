#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidfloor/braid.hpp"
#include "braidfloor/order.hpp"

namespace braidfloor {

/// Exact rational. All bound arithmetic runs on these; strict inequalities
/// at half-integer boundaries must not be blurred by rounding, so no
/// floating point appears anywhere in the checks.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Right-hand side 3/2 - 2*chi/(n+2) of the floor-vs-Euler-characteristic
/// inequality.
Rational theorem_rhs(int n, long chi);

/// Right-hand side 4g/(n+2) - 2/(n+2) + 3/2 of the floor-vs-genus
/// inequality for knot closures of n-braids.
Rational corollary_rhs(int n, long genus);

/// The weaker chained bound g + 1. Note the chain
/// corollary_rhs(n, g) <= g + 1 only holds for g >= 1 or n = 2.
long corollary_weak_rhs(long genus);

/// Smallest non-negative g with floor < corollary_rhs(n, g), computed in
/// exact rational arithmetic: the genus lower bound extracted from the
/// Dehornoy floor. Always >= floor.
long floor_genus_lower(int n, long floor_value);

/// Census of vertices of a foliated-surface tiling, keyed by
/// (a-arc valence, b-arc valence); total valence of a type (a, b) vertex is
/// a + b. This is an arithmetic input, never derived from actual surfaces.
class VertexCensus {
public:
    using Key = std::pair<long, long>;

    void add(long a_arcs, long b_arcs, long count);
    long count(long a_arcs, long b_arcs) const;
    const std::map<Key, long>& counts() const { return counts_; }

private:
    std::map<Key, long> counts_;
};

/// LHS - RHS of the Euler-characteristic identity for vertex censuses:
///   [2V(1,0) + 2V(0,2) + V(0,3) - 4*chi]
///     - [V(2,1) + 2V(3,0) + sum over a+b >= 4 of (2a + b - 4) V(a,b)].
/// The summation weight v + alpha - 4 is read with v = total valence a + b
/// and alpha = a (the a-arc count), so the weight for a type (a, b) vertex
/// is 2a + b - 4. Zero residual means the census is Euler-consistent; the
/// residual is linear in (census, chi).
long lemma2_residual(const VertexCensus& census, long chi);

/// Floor bound a + b/2 - 1/2 contributed by a single type (a, b) vertex,
/// a >= 0, b >= 0, a + b >= 1.
Rational lemma3_bound(long a_arcs, long b_arcs);

/// Certified genus interval for a braid closure, with the provenance of
/// each endpoint ("alexander-span", "bennequin-surface", "dehornoy-floor").
struct GenusBounds {
    long lower = 0;
    long upper = 0;
    std::string lower_source;
    std::string upper_source;
};

/// One evaluated inequality with both sides kept, so failures are
/// diagnosable.
struct BoundCheck {
    std::string name;
    bool holds = false;
    Rational lhs;
    Rational rhs;
};

/// Per-braid record of floor, bounds, and every inequality check that
/// applies. A failed check is data, not an exception: it indicates a bug
/// (or a counterexample).
struct VerificationReport {
    BraidWord braid;
    long floor = 0;
    long chi_lower = 0;                 ///< chi_lower_bound(braid)
    std::optional<GenusBounds> genus;   ///< absent for multi-component closures
    std::vector<BoundCheck> checks;

    bool all_hold() const;
    const BoundCheck* find_check(const std::string& name) const;
};

/// Evaluates every necessary-consequence check on one braid:
///   theorem-chi              floor < theorem_rhs(n, chi_lower_bound(w))
///   corollary-upper  (knots) floor < corollary_rhs(n, bennequin upper)
///   prop1-sigma1             floor < max(s, k) when max(s, k) >= 1
///   bounds-order     (knots) alexander lower <= bennequin upper
///   floor-lower-consistent (knots) floor_genus_lower <= bennequin upper
/// Checks that do not apply (knot-only checks on links, prop1-sigma1 with
/// no sigma_1 letters) are omitted from the report.
VerificationReport verify_braid(const BraidWord& w, const ReduceOptions& options = {});

/// Names of all checks verify_braid can emit, in report order.
const std::vector<std::string>& verification_check_names();

}  // namespace braidfloor

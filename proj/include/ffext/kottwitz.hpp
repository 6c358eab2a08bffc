#pragma once

#include <cstdint>
#include <vector>

#include "ffext/polygon.hpp"

namespace ffext {

/// A generalized Kottwitz set query B(GL_n, k, delta) for split GL_n: k is
/// the total degree (the value of kappa) and delta the dominant bound.
struct KottwitzQuery {
    std::int64_t n = 0;
    std::int64_t k = 0;
    HNPolygon delta;  // rank n, weakly decreasing

    /// Throws std::invalid_argument unless n >= 0 and rank(delta) == n.
    void validate() const;
};

/// B(GL_n, k, delta) as Newton points: all concave integral-breakpoint
/// polygons v of rank n with degree k and v <= delta in dominance order.
/// Empty whenever k != degree(delta) or degree(delta) is not an integer.
/// The result is sorted in decreasing lexicographic order of coordinate
/// expansion (which refines dominance), and memoized on (n, k, delta).
std::vector<HNPolygon> kottwitz_set(const KottwitzQuery& q);

/// Membership test without enumerating: rank, degree, integral breakpoints
/// and dominance below delta.
bool kottwitz_member(const HNPolygon& v, const KottwitzQuery& q);

/// The constant polygon (k/n)^(n); the unique minimal element of the set.
/// Throws std::domain_error unless k = degree(delta) is an integer.
HNPolygon basic_element(const KottwitzQuery& q);

/// All interior positions 0 < j < n where v has a genuine breakpoint
/// (v_j > v_{j+1}) and touches delta (P_v(j) = P_delta(j)). Non-empty exactly
/// when the pair (v, delta) is HN-decomposable; the minimal Levi cuts at
/// these positions. Requires rank(v) = rank(delta) and v <= delta.
std::vector<std::int64_t> hn_decomposable_cuts(const HNPolygon& v, const HNPolygon& delta);

inline bool is_hn_decomposable(const HNPolygon& v, const HNPolygon& delta) {
    return !hn_decomposable_cuts(v, delta).empty();
}

/// Self-test utility for the duality bijection: true iff
/// { v^dual : v in B(GL_n, k, delta) } equals B(GL_n, -k, delta^dual),
/// both sides enumerated independently.
bool involution_check(const KottwitzQuery& q);

}  // namespace ffext

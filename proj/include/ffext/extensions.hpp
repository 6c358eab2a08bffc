#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffext/polygon.hpp"

namespace ffext {

/// A pair (c, d) naming the extension problem
///   0 -> O(d) -> O(a) -> O(c) -> 0,
/// i.e. c is the quotient side and d the sub side.
struct ExtQuery {
    HNPolygon c;
    HNPolygon d;
};

/// Certificate that a polygon a lies in the combinatorial extension set
/// tilde-Ext^1(c, d): a partition {1..n} = H ⊔ K with |H| = rank(c),
/// |K| = rank(d), and the rearranged vector b carrying the coordinates of c
/// on H (in order) and of d on K (in order), such that b_i >= a_i on H,
/// b_i <= a_i on K, and every prefix sum of b dominates that of a, with
/// equality at n.
struct PathWitness {
    std::vector<std::int64_t> h_positions;  // strictly increasing, 1-based
    std::vector<std::int64_t> k_positions;  // complement, 1-based
    std::vector<Rational> b;                // the rearranged vector

    /// Re-checks all three witness conditions against (a, c, d).
    bool verify(const HNPolygon& a, const ExtQuery& q) const;
};

/// Decides a ∈ tilde-Ext^1(c, d) and returns a witness when the answer is
/// yes (the lexicographically least H). Inputs may be arbitrary elements of
/// N(n); no integral-breakpoint requirement. Throws std::invalid_argument
/// unless rank(a) = rank(c) + rank(d).
///
/// Since b may be taken with the c-coordinates in order on H and the
/// d-coordinates in order on K, membership is a monotone lattice path from
/// (0,0) to (r,s): an H-step into column h at global position l needs
/// c_h >= a_l, a K-step into row k needs d_k <= a_l, and every visited node
/// must satisfy P_c(h) + P_d(k) >= P_a(h+k), with equality at (r,s). Solved
/// by an O(r*s) reachability table.
std::optional<PathWitness> tilde_ext_contains(const HNPolygon& a, const ExtQuery& q);

/// Ext^1(c, d) for semistable c and d (each a single block): {c ⊕ d} when
/// slope(c) <= slope(d), otherwise every integral-breakpoint concave polygon
/// of the right rank and degree lying below c ⊕ d. Throws std::domain_error
/// unless both inputs are non-empty single blocks.
std::vector<HNPolygon> ext_semistable_pair(const HNPolygon& c, const HNPolygon& d);

/// The exact set Ext^1(c, d) of HN polygons of extensions of O(c) by O(d),
/// via the inductive classification: peel the lowest stable block
/// c'' = (q/p)^(p) off c (exactly p coordinates) and take the union over
/// e ∈ Ext^1(c', d) of the tilde-filtered candidates below c'' ⊕ e. Inputs
/// must have integral breakpoints. Sorted decreasing-lexicographically;
/// memoized on (c, d).
std::vector<HNPolygon> ext_enumerate(const ExtQuery& q);

/// a ∈ Ext^1(c, d)? Fast paths: when c or d is semistable, or when both are
/// integral, the tilde test alone decides. Otherwise membership is decided
/// through the inductive step without materializing the full rank-n set.
/// Throws std::invalid_argument on rank or degree mismatch (distinct from a
/// genuine "false").
bool ext_contains(const HNPolygon& a, const ExtQuery& q);

/// Constructive interpolation: given a with eps-breakpoints, c with
/// c_i <= a_i componentwise, and an integer m with |c| <= m <= |a|, produces
/// b ∈ N(n) with c_i <= b_i <= a_i and |b| = m. Outputs are not unique; any
/// b meeting the postconditions is valid.
HNPolygon interpolate_general(const HNPolygon& a, const HNPolygon& c, std::int64_t m);

/// Same contract with c constant (a single slope) and a_i >= c_1 for all i.
/// A non-constant c is rejected as a precondition violation.
HNPolygon interpolate_constant(const HNPolygon& a, const HNPolygon& c, std::int64_t m);

}  // namespace ffext

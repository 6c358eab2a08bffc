#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffext/rational.hpp"

namespace ffext {

/// One run of equal slopes in a Harder-Narasimhan polygon.
struct Block {
    Rational slope;
    std::int64_t multiplicity = 0;

    friend bool operator==(const Block&, const Block&) = default;
};

/// An element of N(n): a weakly decreasing rational vector (a_1 >= ... >= a_n),
/// stored in run-length block form with strictly decreasing block slopes and
/// equal slopes fused. The same value serves as a Newton point, as the slope
/// vector of a vector bundle on the Fargues-Fontaine curve, and as an element
/// of a generalized Kottwitz set.
///
/// The empty polygon (rank 0) is a legal value: it is the identity for the
/// direct sum and the base case of the extension recursions.
///
/// Values are immutable after construction; all operations here are pure.
class HNPolygon {
public:
    HNPolygon() = default;

    /// Validates: multiplicities >= 1, slopes strictly decreasing.
    explicit HNPolygon(std::vector<Block> blocks);

    static HNPolygon constant(const Rational& slope, std::int64_t multiplicity);
    /// From a weakly decreasing coordinate vector (runs are fused).
    static HNPolygon from_coordinates(std::span<const Rational> coords);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    std::int64_t rank() const { return rank_; }
    Rational degree() const;

    /// Semistable = at most one slope. (The empty polygon counts as semistable.)
    bool is_semistable() const { return blocks_.size() <= 1; }
    bool is_integral() const;  // all coordinates in Z

    Rational max_slope() const;  // throws on empty
    Rational min_slope() const;  // throws on empty

    /// 1-based coordinate a_i, 1 <= i <= rank().
    Rational coordinate(std::int64_t i) const;
    std::vector<Rational> coordinates() const;

    /// P(l) = a_1 + ... + a_l, with P(0) = 0.
    Rational prefix_sum(std::int64_t l) const;

    /// True iff P(l) is an integer at every interior slope change and at l = n.
    bool has_integral_breakpoints() const { return epsilon_class() == Rational(0); }

    /// The common fractional part eps of all breakpoint prefix sums (including
    /// the total), when one exists; nullopt if the polygon has eps-breakpoints
    /// for no eps in [0,1). The empty polygon has 0-breakpoints.
    std::optional<Rational> epsilon_class() const;

    /// (-a_n, ..., -a_1); an involution. Rank is preserved, degree negated.
    HNPolygon dual() const;

    /// Lexicographic comparison of coordinate expansions; a proper prefix
    /// compares less. This order refines the dominance order: p < q in
    /// dominance implies p < q here (on equal ranks).
    friend std::strong_ordering operator<=>(const HNPolygon& p, const HNPolygon& q);
    friend bool operator==(const HNPolygon& p, const HNPolygon& q) {
        return p.blocks_ == q.blocks_;
    }

private:
    std::vector<Block> blocks_;
    std::int64_t rank_ = 0;
};

/// Merge of the two slope multisets; O(p (+) q) = O(p) (+) O(q).
/// Commutative and associative; degree and rank are additive.
HNPolygon direct_sum(const HNPolygon& p, const HNPolygon& q);

/// The dominance (partial) order p <= q: every prefix sum of p is <= the
/// corresponding prefix sum of q, with equality at l = n ("p lies on or below
/// q with the same endpoints"). Throws std::invalid_argument on rank mismatch.
bool leq_dominance(const HNPolygon& p, const HNPolygon& q);

/// For every rational mu: #{a_i >= mu} >= #{d_i >= mu}, and whenever equality
/// holds the first n_mu coordinates of a and d coincide. Requires
/// rank(a) >= rank(d). Only the finitely many mu among the coordinates of a
/// and d need testing.
bool strongly_slopewise_dominates(const HNPolygon& a, const HNPolygon& d);

/// Newton point <-> bundle slope vector dictionary: -w0[v], i.e. the dual.
/// Self-inverse.
HNPolygon bundle_vector(const HNPolygon& v);

/// Grammar: "(" item ("," item)* ")" with item := slope ["^(" mult ")"],
/// slope := ["-"] int ["/" posint], mult := posint. An omitted exponent means
/// multiplicity = denominator of the reduced slope (so integers and 0 get
/// multiplicity 1). "()" parses as the empty polygon. Whitespace is ignored.
/// Throws std::invalid_argument on malformed text or a non-decreasing slope
/// sequence.
HNPolygon parse_polygon(std::string_view text);

/// Canonical form: reduced slopes, explicit multiplicities, e.g.
/// "(2/5^(6),-3/5^(4))". parse_polygon(format_polygon(p)) == p.
std::string format_polygon(const HNPolygon& p);

}  // namespace ffext

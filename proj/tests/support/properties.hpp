#pragma once

// The randomized property suites behind acceptance criterion 9. Each suite
// runs `iterations` randomized cases (>= 500 in the acceptance run) over
// small instances (rank <= 8, slope denominators <= 4) and returns the
// number of failures; the doctest wrappers and the acceptance binary both
// call these.

#include <cstdint>
#include <iostream>
#include <string>

#include "ffext/extensions.hpp"
#include "ffext/kottwitz.hpp"
#include "ffext/polygon.hpp"
#include "gen.hpp"

namespace ffext::testing {

struct SuiteResult {
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    bool ok() const { return failures == 0 && cases > 0; }
};

/// (a) Ext^1(c, d) ⊆ tilde-Ext^1(c, d) on random enumerated sets, together
/// with the necessary conditions every member satisfies (slopewise dominance
/// on both sides, a <= c ⊕ d) and independence of the peeling side.
inline SuiteResult suite_ext_subset_tilde(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const HNPolygon c = random_integral_polygon(rng, pick(rng, 0, 4));
        const HNPolygon d = random_integral_polygon(rng, pick(rng, 0, 4));
        if (c.rank() + d.rank() > 8) continue;
        ++res.cases;
        const auto members = ext_enumerate({c, d});
        bool bad = false;
        for (const auto& a : members) {
            auto w = tilde_ext_contains(a, {c, d});
            if (!w || !w->verify(a, {c, d})) bad = true;
            if (!strongly_slopewise_dominates(a, d)) bad = true;
            if (!strongly_slopewise_dominates(a.dual(), c.dual())) bad = true;
            if (!leq_dominance(a, direct_sum(c, d))) bad = true;
        }
        std::vector<HNPolygon> via_dual;
        for (const auto& a : ext_enumerate({d.dual(), c.dual()})) via_dual.push_back(a.dual());
        if (!same_set(members, via_dual)) bad = true;
        if (bad) ++res.failures;
    }
    return res;
}

/// (b) tilde-Ext^1 duality: a in tilde(c,d) iff a^dual in tilde(d^dual, c^dual).
inline SuiteResult suite_tilde_duality(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const std::int64_t r = pick(rng, 0, 4), s = pick(rng, 0, 4);
        if (r + s == 0) continue;
        const HNPolygon c = random_vector(rng, r);
        const HNPolygon d = random_vector(rng, s);
        const HNPolygon a = random_vector(rng, r + s);
        ++res.cases;
        const bool lhs = tilde_ext_contains(a, {c, d}).has_value();
        const bool rhs = tilde_ext_contains(a.dual(), {d.dual(), c.dual()}).has_value();
        if (lhs != rhs) ++res.failures;
    }
    return res;
}

/// (c) Oracle equivalence of the inductive enumeration with the one-shot
/// tilde filter when d is semistable, and when both c and d are integral.
inline SuiteResult suite_ext_oracle_equivalence(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    auto tilde_filtered = [](const HNPolygon& c, const HNPolygon& d) {
        std::vector<HNPolygon> out;
        const HNPolygon bound = direct_sum(c, d);
        const Rational deg = bound.degree();
        if (!deg.is_integer()) return out;
        for (const auto& a : kottwitz_set({bound.rank(), deg.to_int64(), bound}))
            if (tilde_ext_contains(a, {c, d})) out.push_back(a);
        return out;
    };
    for (std::int64_t it = 0; it < iterations; ++it) {
        const bool integral_mode = (it % 2 == 1);
        HNPolygon c, d;
        if (integral_mode) {
            c = random_integer_polygon(rng, pick(rng, 0, 4));
            d = random_integer_polygon(rng, pick(rng, 0, 4));
        } else {
            c = random_integral_polygon(rng, pick(rng, 0, 4));
            d = random_semistable_polygon(rng, 4);
        }
        if (c.rank() + d.rank() > 8 || c.rank() + d.rank() == 0) continue;
        ++res.cases;
        if (!same_set(ext_enumerate({c, d}), tilde_filtered(c, d))) ++res.failures;
    }
    return res;
}

/// (d) kottwitz_set against the stable-multiset brute-force enumerator, plus
/// the breakpoint-only dominance equivalence and basic-element minimality.
inline SuiteResult suite_kottwitz_oracle(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const std::int64_t n = pick(rng, 1, 6);
        const HNPolygon delta = random_integral_polygon(rng, n);
        const Rational deg = delta.degree();
        if (!deg.is_integer()) continue;
        const std::int64_t k = deg.to_int64();
        ++res.cases;
        const auto fast = kottwitz_set({n, k, delta});
        const auto slow = kottwitz_bruteforce(n, k, delta);
        if (!same_set(fast, slow)) {
            ++res.failures;
            continue;
        }
        bool bad = false;
        const HNPolygon basic = basic_element({n, k, delta});
        for (const auto& v : fast) {
            // Invariants of every member.
            if (v.rank() != n || v.degree() != deg || !v.has_integral_breakpoints() ||
                !leq_dominance(v, delta) || !kottwitz_member(v, {n, k, delta}))
                bad = true;
            // Below-delta checked only at breakpoints of v is equivalent to
            // the everywhere check, by concavity of the bound.
            bool at_breakpoints = v.prefix_sum(n) == delta.prefix_sum(n);
            std::int64_t pos = 0;
            for (const auto& b : v.blocks()) {
                pos += b.multiplicity;
                if (pos < n && v.prefix_sum(pos) > delta.prefix_sum(pos)) at_breakpoints = false;
            }
            if (!at_breakpoints) bad = true;
            if (!leq_dominance(basic, v)) bad = true;  // basic is the minimum
        }
        // a constant bound admits only its basic element
        if (delta.is_semistable() && fast.size() != 1) bad = true;
        if (bad) ++res.failures;
    }
    return res;
}

/// (e) interpolate_general / interpolate_constant postconditions.
inline SuiteResult suite_interpolate(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const std::int64_t n = pick(rng, 1, 8);
        // a with eps-breakpoints: either integral, or an integral polygon on
        // n+1 coordinates with the first coordinate dropped.
        HNPolygon a;
        if (it % 2 == 0) {
            a = random_integral_polygon(rng, n);
        } else {
            const HNPolygon big = random_integral_polygon(rng, n + 1);
            auto coords = big.coordinates();
            coords.erase(coords.begin());
            a = HNPolygon::from_coordinates(coords);
        }
        const bool constant_mode = (it % 4 == 3);
        HNPolygon c;
        if (constant_mode) {
            const Rational cmin = a.min_slope() - Rational(pick(rng, 0, 2), pick(rng, 1, 3));
            c = HNPolygon::constant(cmin, n);
        } else {
            std::vector<Rational> cv;
            Rational prev;
            bool first = true;
            for (std::int64_t i = 1; i <= n; ++i) {
                Rational ci = a.coordinate(i) - Rational(pick(rng, 0, 6), pick(rng, 1, 3));
                if (!first) ci = std::min(ci, prev);
                cv.push_back(ci);
                prev = ci;
                first = false;
            }
            c = HNPolygon::from_coordinates(cv);
        }
        const mpz_class m_lo = c.degree().ceil();
        const mpz_class m_hi = a.degree().floor();
        if (m_lo > m_hi) continue;
        ++res.cases;
        const std::int64_t m =
            pick(rng, m_lo.get_si(), m_hi.get_si());
        try {
            const HNPolygon b =
                constant_mode ? interpolate_constant(a, c, m) : interpolate_general(a, c, m);
            bool ok = (b.rank() == n) && (b.degree() == Rational(m));
            for (std::int64_t i = 1; i <= n && ok; ++i)
                ok = c.coordinate(i) <= b.coordinate(i) && b.coordinate(i) <= a.coordinate(i);
            if (!ok) ++res.failures;
        } catch (const std::exception&) {
            ++res.failures;
        }
    }
    return res;
}

/// (f) dual involution, rank/degree behaviour under dual, and dominance
/// duality p <= q iff dual(p) <= dual(q); plus chord-below-concave.
inline SuiteResult suite_polygon_duality(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const std::int64_t n = pick(rng, 1, 8);
        const HNPolygon p = random_vector(rng, n);
        HNPolygon q = random_vector(rng, n);
        ++res.cases;
        bool ok = (p.dual().dual() == p) && (p.dual().rank() == p.rank()) &&
                  (p.dual().degree() == -p.degree());
        // Align degrees so that dominance comparison is meaningful.
        const Rational shift = (p.degree() - q.degree()) / Rational(n);
        std::vector<Rational> qv;
        for (std::int64_t i = 1; i <= n; ++i) qv.push_back(q.coordinate(i) + shift);
        q = HNPolygon::from_coordinates(qv);
        ok = ok && (leq_dominance(p, q) == leq_dominance(p.dual(), q.dual()));
        // chord below concave: the constant polygon of the same total lies
        // below any polygon with that (integral) total.
        const HNPolygon r = random_integral_polygon(rng, n);
        if (r.degree().is_integer()) {
            const HNPolygon chord = HNPolygon::constant(r.degree() / Rational(n), n);
            ok = ok && leq_dominance(chord, r);
        }
        // direct sum: commutative, rank/degree additive.
        const HNPolygon s = random_vector(rng, pick(rng, 0, 4));
        ok = ok && direct_sum(p, s) == direct_sum(s, p) &&
             direct_sum(p, s).rank() == p.rank() + s.rank() &&
             direct_sum(p, s).degree() == p.degree() + s.degree();
        if (!ok) ++res.failures;
    }
    return res;
}

/// (g) the Kottwitz-set involution on random queries.
inline SuiteResult suite_involution(std::int64_t iterations, std::uint64_t seed) {
    Rng rng(seed);
    SuiteResult res;
    for (std::int64_t it = 0; it < iterations; ++it) {
        const std::int64_t n = pick(rng, 1, 6);
        const HNPolygon delta = random_integral_polygon(rng, n);
        const Rational deg = delta.degree();
        if (!deg.is_integer()) continue;
        ++res.cases;
        if (!involution_check({n, deg.to_int64(), delta})) ++res.failures;
    }
    return res;
}

}  // namespace ffext::testing

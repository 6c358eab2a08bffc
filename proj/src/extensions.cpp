#include "ffext/extensions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ffext/budget.hpp"
#include "ffext/kottwitz.hpp"

namespace ffext {

bool PathWitness::verify(const HNPolygon& a, const ExtQuery& q) const {
    const std::int64_t n = a.rank();
    if (static_cast<std::int64_t>(h_positions.size()) != q.c.rank()) return false;
    if (static_cast<std::int64_t>(k_positions.size()) != q.d.rank()) return false;
    if (static_cast<std::int64_t>(b.size()) != n) return false;

    std::vector<bool> in_h(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < h_positions.size(); ++i) {
        const std::int64_t pos = h_positions[i];
        if (pos < 1 || pos > n || in_h[static_cast<std::size_t>(pos)]) return false;
        if (i > 0 && h_positions[i - 1] >= pos) return false;
        in_h[static_cast<std::size_t>(pos)] = true;
        if (b[static_cast<std::size_t>(pos - 1)] != q.c.coordinate(static_cast<std::int64_t>(i) + 1))
            return false;
    }
    for (std::size_t i = 0; i < k_positions.size(); ++i) {
        const std::int64_t pos = k_positions[i];
        if (pos < 1 || pos > n || in_h[static_cast<std::size_t>(pos)]) return false;
        if (i > 0 && k_positions[i - 1] >= pos) return false;
        if (b[static_cast<std::size_t>(pos - 1)] != q.d.coordinate(static_cast<std::int64_t>(i) + 1))
            return false;
    }

    Rational pb, pa;
    for (std::int64_t l = 1; l <= n; ++l) {
        pb += b[static_cast<std::size_t>(l - 1)];
        pa += a.coordinate(l);
        const bool h = in_h[static_cast<std::size_t>(l)];
        if (h && b[static_cast<std::size_t>(l - 1)] < a.coordinate(l)) return false;
        if (!h && b[static_cast<std::size_t>(l - 1)] > a.coordinate(l)) return false;
        if (pb < pa) return false;
    }
    return pb == pa;
}

std::optional<PathWitness> tilde_ext_contains(const HNPolygon& a, const ExtQuery& q) {
    const std::int64_t r = q.c.rank(), s = q.d.rank(), n = a.rank();
    if (r + s != n) throw std::invalid_argument("tilde_ext_contains: rank(a) != rank(c) + rank(d)");
    if (a.degree() != q.c.degree() + q.d.degree()) return std::nullopt;

    const auto ca = a.coordinates();
    const auto cc = q.c.coordinates();
    const auto cd = q.d.coordinates();
    std::vector<Rational> pa(static_cast<std::size_t>(n) + 1), pc(static_cast<std::size_t>(r) + 1),
        pd(static_cast<std::size_t>(s) + 1);
    for (std::int64_t i = 0; i < n; ++i) pa[i + 1] = pa[i] + ca[i];
    for (std::int64_t i = 0; i < r; ++i) pc[i + 1] = pc[i] + cc[i];
    for (std::int64_t i = 0; i < s; ++i) pd[i + 1] = pd[i] + cd[i];

    auto idx = [s](std::int64_t h, std::int64_t k) {
        return static_cast<std::size_t>(h * (s + 1) + k);
    };
    // Forward reachability: node (h,k) holds iff some legal path reaches it
    // and the node constraint P_c(h)+P_d(k) >= P_a(h+k) is satisfied there.
    std::vector<bool> fwd(static_cast<std::size_t>((r + 1) * (s + 1)), false);
    fwd[idx(0, 0)] = true;
    for (std::int64_t h = 0; h <= r; ++h) {
        for (std::int64_t k = 0; k <= s; ++k) {
            if (h == 0 && k == 0) continue;
            const std::int64_t l = h + k;
            bool ok = false;
            if (h > 0 && fwd[idx(h - 1, k)] && cc[h - 1] >= ca[l - 1]) ok = true;
            if (!ok && k > 0 && fwd[idx(h, k - 1)] && cd[k - 1] <= ca[l - 1]) ok = true;
            fwd[idx(h, k)] = ok && (pc[h] + pd[k] >= pa[l]);
        }
    }
    if (!fwd[idx(r, s)]) return std::nullopt;

    // Backward reachability to (r,s), restricted to forward-reachable nodes.
    std::vector<bool> bwd(static_cast<std::size_t>((r + 1) * (s + 1)), false);
    bwd[idx(r, s)] = true;
    for (std::int64_t h = r; h >= 0; --h) {
        for (std::int64_t k = s; k >= 0; --k) {
            if (h == r && k == s) continue;
            if (!fwd[idx(h, k)]) continue;
            const std::int64_t l = h + k;
            bool ok = false;
            if (h < r && bwd[idx(h + 1, k)] && cc[h] >= ca[l] && pc[h + 1] + pd[k] >= pa[l + 1])
                ok = true;
            if (!ok && k < s && bwd[idx(h, k + 1)] && cd[k] <= ca[l] && pc[h] + pd[k + 1] >= pa[l + 1])
                ok = true;
            bwd[idx(h, k)] = ok;
        }
    }
    if (!bwd[idx(0, 0)]) return std::nullopt;

    // Walk preferring H-steps: yields the lexicographically least H.
    PathWitness w;
    w.b.resize(static_cast<std::size_t>(n));
    std::int64_t h = 0, k = 0;
    while (h < r || k < s) {
        const std::int64_t l = h + k;
        if (h < r && cc[h] >= ca[l] && pc[h + 1] + pd[k] >= pa[l + 1] && bwd[idx(h + 1, k)]) {
            w.h_positions.push_back(l + 1);
            w.b[static_cast<std::size_t>(l)] = cc[h];
            ++h;
        } else {
            w.k_positions.push_back(l + 1);
            w.b[static_cast<std::size_t>(l)] = cd[k];
            ++k;
        }
    }
    return w;
}

namespace {

/// All extensions of O(c) by O(d) split when every slope of d is >= every
/// slope of c (the Ext group between the stable summands vanishes).
bool only_split_extension(const HNPolygon& c, const HNPolygon& d) {
    if (c.empty() || d.empty()) return true;
    return c.max_slope() <= d.min_slope();
}

/// Quick necessary conditions (strongly slopewise dominance on both sides
/// plus a <= c ⊕ d) applied before the lattice-path test.
bool slopewise_prefilter(const HNPolygon& a, const HNPolygon& c, const HNPolygon& d) {
    return strongly_slopewise_dominates(a, d) &&
           strongly_slopewise_dominates(a.dual(), c.dual());
}

/// Splits c into (c', c'') where c'' is the lowest stable block (q/p)^(p),
/// exactly p coordinates. Requires a non-empty c with integral breakpoints.
std::pair<HNPolygon, HNPolygon> peel_lowest_stable(const HNPolygon& c) {
    const Block last = c.blocks().back();
    const mpz_class& den = last.slope.denominator();
    if (!den.fits_slong_p()) throw std::overflow_error("ext: denominator too large");
    const std::int64_t p = den.get_si();
    if (last.multiplicity < p)
        throw std::logic_error("ext: integral breakpoints violated while peeling");
    std::vector<Block> head(c.blocks().begin(), c.blocks().end() - 1);
    if (last.multiplicity > p) head.push_back(Block{last.slope, last.multiplicity - p});
    return {HNPolygon(std::move(head)), HNPolygon::constant(last.slope, p)};
}

struct ExtKey {
    std::string c, d;
    friend bool operator<(const ExtKey& a, const ExtKey& b) {
        return std::tie(a.c, a.d) < std::tie(b.c, b.d);
    }
};

std::mutex g_ext_mutex;
std::map<ExtKey, std::vector<HNPolygon>> g_ext_cache;

std::size_t ext_cache_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("FFEXT_CACHE_LIMIT")) {
            const long v = std::atol(env);
            if (v >= 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4096);
    }();
    return limit;
}

void require_integral_breakpoints(const HNPolygon& p, const char* role) {
    if (!p.has_integral_breakpoints())
        throw std::invalid_argument(std::string("ext: ") + role +
                                    " must have integral breakpoints");
}

/// Candidates for Ext^1(c'', e) with c'' semistable: integral-breakpoint
/// polygons of matching rank and degree lying below c'' ⊕ e (every extension
/// does), filtered by the lattice-path test.
std::vector<HNPolygon> semistable_step(const HNPolygon& cpp, const HNPolygon& e) {
    const HNPolygon bound = direct_sum(cpp, e);
    const Rational deg = bound.degree();
    if (!deg.is_integer()) return {};
    std::vector<HNPolygon> out;
    for (const auto& a : kottwitz_set(KottwitzQuery{bound.rank(), deg.to_int64(), bound})) {
        if (!slopewise_prefilter(a, cpp, e)) continue;
        if (tilde_ext_contains(a, ExtQuery{cpp, e})) out.push_back(a);
    }
    return out;
}

}  // namespace

std::vector<HNPolygon> ext_semistable_pair(const HNPolygon& c, const HNPolygon& d) {
    if (!c.is_semistable() || c.empty() || !d.is_semistable() || d.empty())
        throw std::domain_error("ext_semistable_pair: inputs must be non-empty and semistable");
    if (c.max_slope() <= d.max_slope()) return {direct_sum(c, d)};
    const HNPolygon bound = direct_sum(c, d);
    const Rational deg = bound.degree();
    if (!deg.is_integer()) return {};
    return kottwitz_set(KottwitzQuery{bound.rank(), deg.to_int64(), bound});
}

std::vector<HNPolygon> ext_enumerate(const ExtQuery& q) {
    require_integral_breakpoints(q.c, "c");
    require_integral_breakpoints(q.d, "d");
    if (q.c.empty()) return {q.d};
    if (q.d.empty()) return {q.c};
    if (only_split_extension(q.c, q.d)) return {direct_sum(q.c, q.d)};

    const ExtKey key{format_polygon(q.c), format_polygon(q.d)};
    {
        std::lock_guard<std::mutex> lock(g_ext_mutex);
        auto it = g_ext_cache.find(key);
        if (it != g_ext_cache.end()) return it->second;
    }

    auto [cprime, cpp] = peel_lowest_stable(q.c);
    std::set<HNPolygon> acc;
    for (const auto& e : ext_enumerate(ExtQuery{cprime, q.d})) {
        for (auto& a : semistable_step(cpp, e)) acc.insert(std::move(a));
    }
    std::vector<HNPolygon> result(acc.begin(), acc.end());
    std::sort(result.begin(), result.end(),
              [](const HNPolygon& x, const HNPolygon& y) { return y < x; });

    std::lock_guard<std::mutex> lock(g_ext_mutex);
    if (g_ext_cache.size() >= ext_cache_limit()) g_ext_cache.clear();
    g_ext_cache.emplace(key, result);
    return result;
}

bool ext_contains(const HNPolygon& a, const ExtQuery& q) {
    if (a.rank() != q.c.rank() + q.d.rank())
        throw std::invalid_argument("ext_contains: rank mismatch");
    if (a.degree() != q.c.degree() + q.d.degree())
        throw std::invalid_argument("ext_contains: degree mismatch");
    require_integral_breakpoints(q.c, "c");
    require_integral_breakpoints(q.d, "d");
    if (!a.has_integral_breakpoints()) return false;
    if (!slopewise_prefilter(a, q.c, q.d)) return false;
    if (!tilde_ext_contains(a, q)) return false;
    // Fast paths where the lattice-path test alone decides: one side
    // semistable, or at least two of a, c, d with all-integer coordinates.
    if (q.c.is_semistable() || q.d.is_semistable()) return true;
    const int n_integral = (a.is_integral() ? 1 : 0) + (q.c.is_integral() ? 1 : 0) +
                           (q.d.is_integral() ? 1 : 0);
    if (n_integral >= 2) return true;
    // Inductive step; only the smaller problem (c', d) is materialized.
    auto [cprime, cpp] = peel_lowest_stable(q.c);
    for (const auto& e : ext_enumerate(ExtQuery{cprime, q.d})) {
        if (tilde_ext_contains(a, ExtQuery{cpp, e})) return true;
    }
    return false;
}

namespace {

/// Finds b(t) with b_i = clamp(t; c_i, a_i) and |b(t)| = m. The sum is a
/// continuous nondecreasing piecewise linear function of t sweeping from |c|
/// to |a|, with kinks only at coordinate values of a and c, so t can be
/// solved for exactly.
HNPolygon clamp_interpolate(const HNPolygon& a, const HNPolygon& c, std::int64_t m) {
    const std::int64_t n = a.rank();
    if (n == 0) return HNPolygon();
    const auto av = a.coordinates();
    const auto cv = c.coordinates();

    std::vector<Rational> grid = av;
    grid.insert(grid.end(), cv.begin(), cv.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const Rational target(m);
    auto sum_at = [&](const Rational& t) {
        Rational s;
        for (std::int64_t i = 0; i < n; ++i)
            s += std::min(av[static_cast<std::size_t>(i)],
                          std::max(cv[static_cast<std::size_t>(i)], t));
        return s;
    };

    // S(grid.front()) = |c| <= m and S(grid.back()) = |a| >= m, so the first
    // grid point j with S >= m exists; the solution lies on the segment
    // [grid[j-1], grid[j]], where S is linear with slope = #free coordinates.
    std::size_t j = 0;
    while (sum_at(grid[j]) < target) ++j;
    Rational t = grid[j];
    if (j > 0) {
        const Rational s_lo = sum_at(grid[j - 1]);
        if (s_lo == target) {
            t = grid[j - 1];
        } else if (sum_at(grid[j]) != target) {
            std::int64_t free_coords = 0;
            for (std::int64_t i = 0; i < n; ++i) {
                if (cv[static_cast<std::size_t>(i)] <= grid[j - 1] &&
                    av[static_cast<std::size_t>(i)] >= grid[j])
                    ++free_coords;
            }
            if (free_coords == 0) throw std::logic_error("interpolate: no solution found");
            t = grid[j - 1] + (target - s_lo) / Rational(free_coords);
        }
    }
    if (sum_at(t) != target) throw std::logic_error("interpolate: no solution found");

    std::vector<Rational> bv(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        bv[static_cast<std::size_t>(i)] = std::min(av[static_cast<std::size_t>(i)],
                                                   std::max(cv[static_cast<std::size_t>(i)], t));
    return HNPolygon::from_coordinates(bv);
}

void check_interpolate_common(const HNPolygon& a, const HNPolygon& c, std::int64_t m) {
    if (a.rank() != c.rank())
        throw std::invalid_argument("interpolate: rank(a) != rank(c)");
    if (!a.epsilon_class())
        throw std::invalid_argument("interpolate: a must have eps-breakpoints");
    if (Rational(m) < c.degree() || a.degree() < Rational(m))
        throw std::invalid_argument("interpolate: m must satisfy |c| <= m <= |a|");
}

}  // namespace

HNPolygon interpolate_general(const HNPolygon& a, const HNPolygon& c, std::int64_t m) {
    check_interpolate_common(a, c, m);
    for (std::int64_t i = 1; i <= a.rank(); ++i)
        if (a.coordinate(i) < c.coordinate(i))
            throw std::invalid_argument("interpolate_general: requires a_i >= c_i");
    return clamp_interpolate(a, c, m);
}

HNPolygon interpolate_constant(const HNPolygon& a, const HNPolygon& c, std::int64_t m) {
    if (!c.is_semistable() || c.empty())
        throw std::invalid_argument("interpolate_constant: c must be constant");
    check_interpolate_common(a, c, m);
    if (a.rank() > 0 && a.min_slope() < c.max_slope())
        throw std::invalid_argument("interpolate_constant: requires a_i >= c_1");
    return clamp_interpolate(a, c, m);
}

}  // namespace ffext

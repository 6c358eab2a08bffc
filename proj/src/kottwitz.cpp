#include "ffext/kottwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ffext/budget.hpp"

namespace ffext {

namespace {

std::atomic<std::uint64_t> g_budget_limit{0};
std::atomic<std::uint64_t> g_budget_used{0};

std::size_t cache_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("FFEXT_CACHE_LIMIT")) {
            const long v = std::atol(env);
            if (v >= 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4096);
    }();
    return limit;
}

}  // namespace

CandidateBudget::CandidateBudget(std::uint64_t limit) {
    g_budget_limit.store(limit);
    g_budget_used.store(0);
}

CandidateBudget::~CandidateBudget() {
    g_budget_limit.store(0);
    g_budget_used.store(0);
}

void CandidateBudget::charge(std::uint64_t n) {
    const std::uint64_t limit = g_budget_limit.load(std::memory_order_relaxed);
    if (limit == 0) return;
    if (g_budget_used.fetch_add(n, std::memory_order_relaxed) + n > limit)
        throw BudgetExceeded();
}

void KottwitzQuery::validate() const {
    if (n < 0) throw std::invalid_argument("KottwitzQuery: n must be >= 0");
    if (delta.rank() != n) throw std::invalid_argument("KottwitzQuery: rank(delta) != n");
}

namespace {

/// Enumerates all concave integral-breakpoint polygons of rank n and degree k
/// lying below delta. State: current position, integer prefix sum there, and
/// the previous block slope. Block ends are exactly the breakpoints, so each
/// candidate is visited once (maximal blocks, strictly decreasing slopes).
/// Within a block P_v is linear and P_delta concave, so the below-delta
/// constraint needs checking only at the new block end.
class Enumerator {
public:
    Enumerator(std::int64_t n, std::int64_t k, const HNPolygon& delta)
        : n_(n), k_(k) {
        pdelta_.reserve(static_cast<std::size_t>(n) + 1);
        for (std::int64_t l = 0; l <= n; ++l) pdelta_.push_back(delta.prefix_sum(l));
    }

    std::vector<HNPolygon> run() {
        blocks_.clear();
        out_.clear();
        extend(0, 0, std::nullopt);
        return std::move(out_);
    }

private:
    void extend(std::int64_t pos, std::int64_t p, std::optional<Rational> last_slope) {
        if (pos == n_) {
            CandidateBudget::charge();
            out_.push_back(HNPolygon(blocks_));
            return;
        }
        const std::int64_t rest = n_ - pos;
        for (std::int64_t len = 1; len <= rest; ++len) {
            // Upper bound: P once rose to p + d must stay below delta.
            const Rational room = pdelta_[static_cast<std::size_t>(pos + len)] - Rational(p);
            mpz_class dmax_z = room.floor();
            if (!dmax_z.fits_slong_p()) throw std::overflow_error("kottwitz_set: bound overflow");
            std::int64_t dmax = dmax_z.get_si();
            if (last_slope) {
                // Block slope strictly below the previous one: d < len * last.
                const mpz_class top = (*last_slope * Rational(len)).ceil() - 1;
                if (!top.fits_slong_p()) throw std::overflow_error("kottwitz_set: bound overflow");
                dmax = std::min<std::int64_t>(dmax, top.get_si());
            }
            if (pos + len == n_) {
                const std::int64_t d = k_ - p;
                if (d <= dmax) emit(pos, p, len, d);
            } else {
                // The remaining coordinates all lie strictly below this block's
                // slope, so d/len must exceed the average of what is left:
                // d(n - pos) > len(k - p).
                const Rational lo = Rational(len * (k_ - p), n_ - pos);
                mpz_class dmin_z = lo.floor() + 1;
                if (!dmin_z.fits_slong_p()) throw std::overflow_error("kottwitz_set: bound overflow");
                for (std::int64_t d = dmin_z.get_si(); d <= dmax; ++d)
                    emit(pos, p, len, d);
            }
        }
    }

    void emit(std::int64_t pos, std::int64_t p, std::int64_t len, std::int64_t d) {
        blocks_.push_back(Block{Rational(d, len), len});
        extend(pos + len, p + d, blocks_.back().slope);
        blocks_.pop_back();
    }

    std::int64_t n_;
    std::int64_t k_;
    std::vector<Rational> pdelta_;
    std::vector<Block> blocks_;
    std::vector<HNPolygon> out_;
};

struct CacheKey {
    std::int64_t n;
    std::int64_t k;
    std::string delta;
    friend bool operator<(const CacheKey& a, const CacheKey& b) {
        return std::tie(a.n, a.k, a.delta) < std::tie(b.n, b.k, b.delta);
    }
};

std::mutex g_cache_mutex;
std::map<CacheKey, std::vector<HNPolygon>> g_cache;

}  // namespace

std::vector<HNPolygon> kottwitz_set(const KottwitzQuery& q) {
    q.validate();
    const Rational total = q.delta.degree();
    if (!total.is_integer() || total != Rational(q.k)) return {};
    if (q.n == 0) return {HNPolygon()};

    const CacheKey key{q.n, q.k, format_polygon(q.delta)};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }

    auto result = Enumerator(q.n, q.k, q.delta).run();
    // Decreasing lexicographic order, compatible with dominance.
    std::sort(result.begin(), result.end(),
              [](const HNPolygon& a, const HNPolygon& b) { return b < a; });

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache.size() >= cache_limit()) g_cache.clear();
    g_cache.emplace(key, result);
    return result;
}

bool kottwitz_member(const HNPolygon& v, const KottwitzQuery& q) {
    q.validate();
    if (v.rank() != q.n) return false;
    if (v.degree() != Rational(q.k)) return false;
    if (!v.has_integral_breakpoints()) return false;
    return leq_dominance(v, q.delta);
}

HNPolygon basic_element(const KottwitzQuery& q) {
    q.validate();
    const Rational total = q.delta.degree();
    if (!total.is_integer() || total != Rational(q.k))
        throw std::domain_error("basic_element: k must equal the integral degree of delta");
    if (q.n == 0) return HNPolygon();
    return HNPolygon::constant(Rational(q.k, q.n), q.n);
}

std::vector<std::int64_t> hn_decomposable_cuts(const HNPolygon& v, const HNPolygon& delta) {
    if (v.rank() != delta.rank())
        throw std::invalid_argument("hn_decomposable_cuts: rank mismatch");
    if (!leq_dominance(v, delta))
        throw std::invalid_argument("hn_decomposable_cuts: v must lie below delta");
    std::vector<std::int64_t> cuts;
    std::int64_t pos = 0;
    Rational p;
    // Genuine breakpoints of v are its interior block ends.
    for (std::size_t i = 0; i + 1 < v.blocks().size(); ++i) {
        pos += v.blocks()[i].multiplicity;
        p += v.blocks()[i].slope * Rational(v.blocks()[i].multiplicity);
        if (p == delta.prefix_sum(pos)) cuts.push_back(pos);
    }
    return cuts;
}

bool involution_check(const KottwitzQuery& q) {
    q.validate();
    const auto lhs = kottwitz_set(q);
    const auto rhs = kottwitz_set(KottwitzQuery{q.n, -q.k, q.delta.dual()});
    if (lhs.size() != rhs.size()) return false;
    std::set<HNPolygon> duals;
    for (const auto& v : lhs) duals.insert(v.dual());
    return std::all_of(rhs.begin(), rhs.end(),
                       [&duals](const HNPolygon& v) { return duals.count(v) > 0; });
}

}  // namespace ffext

#include "ffext/strata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ffext/extensions.hpp"
#include "ffext/kottwitz.hpp"

namespace ffext {

void StrataConfig::validate() const {
    if (n <= 0 || r <= 0 || r >= n)
        throw std::invalid_argument("StrataConfig: need 0 < r < n");
}

HNPolygon StrataConfig::nu_b() const {
    validate();
    return HNPolygon::constant(Rational(r, n), n);
}

HNPolygon StrataConfig::delta() const {
    validate();
    // Dominant sort of nu_b - mu: (r/n) on n-r coordinates, r/n - 1 on r.
    return HNPolygon({Block{Rational(r, n), n - r}, Block{Rational(r - n, n), r}});
}

std::int64_t LeviSplit::k(const StrataConfig& cfg) const {
    return s - m * cfg.r / cfg.n;  // exact: n | m*r for valid splits
}

HNPolygon LeviSplit::delta1(const StrataConfig& cfg) const {
    const Rational nu(cfg.r, cfg.n);
    std::vector<Block> blocks;
    if (m - s > 0) blocks.push_back(Block{nu, m - s});
    if (s > 0) blocks.push_back(Block{nu - Rational(1), s});
    return HNPolygon(std::move(blocks));
}

HNPolygon LeviSplit::delta2(const StrataConfig& cfg) const {
    const Rational nu(cfg.r, cfg.n);
    const std::int64_t ones = cfg.r - s;            // ones of w*mu in block 2
    const std::int64_t zeros = (cfg.n - m) - ones;  // remaining coordinates
    std::vector<Block> blocks;
    if (zeros > 0) blocks.push_back(Block{nu, zeros});
    if (ones > 0) blocks.push_back(Block{nu - Rational(1), ones});
    return HNPolygon(std::move(blocks));
}

const char* to_string(WaStatus s) {
    switch (s) {
        case WaStatus::kDisjoint: return "DISJOINT";
        case WaStatus::kProperIntersect: return "PROPER_INTERSECT";
        case WaStatus::kContained: return "CONTAINED";
    }
    return "?";
}

std::vector<std::int64_t> levi_reductions(const StrataConfig& cfg) {
    cfg.validate();
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m < cfg.n; ++m)
        if ((m * cfg.r) % cfg.n == 0) out.push_back(m);
    return out;
}

std::vector<LeviSplit> mu_negative_splits(const StrataConfig& cfg, std::int64_t m) {
    cfg.validate();
    if ((m * cfg.r) % cfg.n != 0)
        throw std::invalid_argument("mu_negative_splits: no Levi reduction at this cut");
    const std::int64_t share = m * cfg.r / cfg.n;  // the isoclinic share m*r/n
    const std::int64_t lo = std::max<std::int64_t>(0, cfg.r - (cfg.n - m));
    const std::int64_t hi = std::min(m, cfg.r);
    std::vector<LeviSplit> out;
    for (std::int64_t s = lo; s <= hi; ++s)
        if (s > share) out.push_back(LeviSplit{m, s});
    return out;
}

namespace {

/// Iterates the mu-negative Levi data of cfg in canonical order, calling
/// fn(split, x1, x2) until it returns true; returns the first hit.
template <typename Fn>
std::optional<StratumWitness> find_levi_witness(const StrataConfig& cfg, Fn&& fn) {
    for (const std::int64_t m : levi_reductions(cfg)) {
        for (const LeviSplit& split : mu_negative_splits(cfg, m)) {
            const std::int64_t k = split.k(cfg);
            const auto b1 = kottwitz_set(KottwitzQuery{m, -k, split.delta1(cfg)});
            const auto b2 = kottwitz_set(KottwitzQuery{cfg.n - m, k, split.delta2(cfg)});
            for (const auto& x1 : b1) {
                for (const auto& x2 : b2) {
                    if (fn(split, x1, x2)) return StratumWitness{m, split.s, x1, x2};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

StratumRecord stratum_status(const StrataConfig& cfg, const HNPolygon& nu_b_prime) {
    cfg.validate();
    if (nu_b_prime.rank() != cfg.n)
        throw std::invalid_argument("stratum_status: rank(nu_b_prime) != n");

    StratumRecord rec;
    rec.nu_b_prime = nu_b_prime;
    const HNPolygon bound = cfg.delta();
    rec.nonempty = kottwitz_member(nu_b_prime, KottwitzQuery{cfg.n, 0, bound});
    if (!rec.nonempty) {
        rec.wa_status = WaStatus::kDisjoint;  // vacuous for an empty stratum
        return rec;
    }
    rec.cuts = hn_decomposable_cuts(nu_b_prime, bound);
    rec.hn_decomposable = !rec.cuts.empty();
    if (rec.hn_decomposable) {
        rec.wa_status = WaStatus::kDisjoint;
        return rec;
    }

    const HNPolygon a = bundle_vector(nu_b_prime);
    rec.witness = find_levi_witness(
        cfg, [&a](const LeviSplit&, const HNPolygon& x1, const HNPolygon& x2) {
            const ExtQuery q{bundle_vector(x2), bundle_vector(x1)};
            // The lattice-path test is a cheap necessary condition; only pairs
            // passing it reach the exact membership test.
            if (!tilde_ext_contains(a, q)) return false;
            return ext_contains(a, q);
        });
    rec.wa_status = rec.witness ? WaStatus::kProperIntersect : WaStatus::kContained;
    return rec;
}

namespace {

struct UnionData {
    std::map<HNPolygon, StratumWitness> first_witness;  // bundle vector -> witness
    std::vector<HNPolygon> split_sums;
};

UnionData collect_extension_union(const StrataConfig& cfg) {
    UnionData data;
    std::vector<HNPolygon> splits;
    find_levi_witness(cfg, [&](const LeviSplit& split, const HNPolygon& x1, const HNPolygon& x2) {
        const HNPolygon c = bundle_vector(x2);
        const HNPolygon d = bundle_vector(x1);
        splits.push_back(direct_sum(c, d));
        const StratumWitness w{split.m, split.s, x1, x2};
        for (const auto& a : ext_enumerate(ExtQuery{c, d})) {
            data.first_witness.emplace(a, w);  // keep the first pair seen
        }
        return false;  // visit every pair
    });
    std::sort(splits.begin(), splits.end(), [](const HNPolygon& x, const HNPolygon& y) { return y < x; });
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    data.split_sums = std::move(splits);
    return data;
}

}  // namespace

std::vector<HNPolygon> extension_union(const StrataConfig& cfg) {
    cfg.validate();
    const UnionData data = collect_extension_union(cfg);
    std::vector<HNPolygon> out;
    out.reserve(data.first_witness.size());
    for (const auto& [poly, witness] : data.first_witness) out.push_back(poly);
    std::sort(out.begin(), out.end(), [](const HNPolygon& x, const HNPolygon& y) { return y < x; });
    return out;
}

std::vector<HNPolygon> extension_union_split_sums(const StrataConfig& cfg) {
    cfg.validate();
    return collect_extension_union(cfg).split_sums;
}

StrataReport stratification_report(const StrataConfig& cfg) {
    cfg.validate();
    StrataReport report;
    report.delta = cfg.delta();
    const auto members = kottwitz_set(KottwitzQuery{cfg.n, 0, report.delta});
    const UnionData data = collect_extension_union(cfg);

    for (const auto& v : members) {
        StratumRecord rec;
        rec.nu_b_prime = v;
        rec.nonempty = true;
        rec.cuts = hn_decomposable_cuts(v, report.delta);
        rec.hn_decomposable = !rec.cuts.empty();
        if (rec.hn_decomposable) {
            rec.wa_status = WaStatus::kDisjoint;
        } else {
            auto it = data.first_witness.find(bundle_vector(v));
            if (it != data.first_witness.end()) {
                rec.wa_status = WaStatus::kProperIntersect;
                rec.witness = it->second;
            } else {
                rec.wa_status = WaStatus::kContained;
            }
        }
        report.records.push_back(std::move(rec));
    }
    // kottwitz_set is already dominance-descending; keep that order.
    auto& s = report.summary;
    for (const auto& rec : report.records) {
        ++s.nonempty;
        if (rec.hn_decomposable) ++s.hn_decomposable;
        else ++s.hn_indecomposable;
        switch (rec.wa_status) {
            case WaStatus::kDisjoint: ++s.disjoint; break;
            case WaStatus::kProperIntersect: ++s.proper_intersect; break;
            case WaStatus::kContained: ++s.contained; break;
        }
    }
    return report;
}

}  // namespace ffext

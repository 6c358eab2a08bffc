#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffext/polygon.hpp"

namespace ffext {

/// The triple (GL_n, mu = (1^(r), 0^(n-r)), b basic with kappa(b) = r).
/// Derived data: nu_b = (r/n)^(n) and the dominant bound
/// delta = nu_b - w0*mu = ((r/n)^(n-r), (r/n - 1)^(r)), of degree 0.
struct StrataConfig {
    std::int64_t n = 0;
    std::int64_t r = 0;

    void validate() const;  // throws unless 0 < r < n
    HNPolygon nu_b() const;
    HNPolygon delta() const;
};

/// A maximal Levi GL_m x GL_{n-m} together with a mu-weight distribution:
/// s ones land in the first block, r - s in the second. The split is
/// mu-negative exactly when s > m*r/n, i.e. k = s - m*r/n > 0.
struct LeviSplit {
    std::int64_t m = 0;
    std::int64_t s = 0;

    std::int64_t k(const StrataConfig& cfg) const;  // s - m*r/n
    HNPolygon delta1(const StrataConfig& cfg) const;
    HNPolygon delta2(const StrataConfig& cfg) const;
};

enum class WaStatus { kDisjoint, kProperIntersect, kContained };

const char* to_string(WaStatus s);

/// A destabilizing extension certificate: the Newton pair
/// (x1, x2) in B(GL_m, -k, delta1) x B(GL_{n-m}, k, delta2) with
/// bundle_vector(nu_b') in Ext^1(bundle_vector(x2), bundle_vector(x1)).
/// The first Levi block is the sub-bundle side; its bundle has degree k > 0.
struct StratumWitness {
    std::int64_t m = 0;
    std::int64_t s = 0;
    HNPolygon x1;
    HNPolygon x2;
};

struct StratumRecord {
    HNPolygon nu_b_prime;
    bool nonempty = false;
    bool hn_decomposable = false;
    std::vector<std::int64_t> cuts;  // HN touching positions when decomposable
    WaStatus wa_status = WaStatus::kContained;
    std::optional<StratumWitness> witness;
};

struct StrataSummary {
    std::int64_t nonempty = 0;
    std::int64_t hn_decomposable = 0;
    std::int64_t hn_indecomposable = 0;
    std::int64_t disjoint = 0;
    std::int64_t proper_intersect = 0;
    std::int64_t contained = 0;
};

struct StrataReport {
    HNPolygon delta;
    std::vector<StratumRecord> records;  // dominance-descending order
    StrataSummary summary;
};

/// All cut positions 0 < m < n at which b has a reduction to the maximal
/// Levi GL_m x GL_{n-m}: exactly those m with n | m*r.
std::vector<std::int64_t> levi_reductions(const StrataConfig& cfg);

/// All mu-negative weight distributions for the Levi cut at m: the splits s
/// with max(0, r-(n-m)) <= s <= min(m, r) and s > m*r/n.
std::vector<LeviSplit> mu_negative_splits(const StrataConfig& cfg, std::int64_t m);

/// Classifies a single Newton stratum. Non-membership in B(GL_n, 0, delta)
/// yields nonempty = false (wa_status then carries no information).
/// HN-decomposable strata are disjoint from the weakly admissible locus;
/// otherwise the stratum is properly intersecting iff some mu-negative
/// Levi pair realizes the bundle of nu_b' as an extension, and contained
/// otherwise. Throws std::invalid_argument on rank mismatch.
StratumRecord stratum_status(const StrataConfig& cfg, const HNPolygon& nu_b_prime);

/// One record per element of B(GL_n, 0, delta), plus summary counts. The
/// union of reachable extension polygons is computed once and shared.
StrataReport stratification_report(const StrataConfig& cfg);

/// The union E of Ext^1(bundle_vector(x2), bundle_vector(x1)) over all
/// mu-negative Levi data, as bundle slope vectors (sorted descending).
std::vector<HNPolygon> extension_union(const StrataConfig& cfg);

/// The subset of E consisting of the split direct sums
/// bundle_vector(x2) ⊕ bundle_vector(x1) themselves.
std::vector<HNPolygon> extension_union_split_sums(const StrataConfig& cfg);

}  // namespace ffext

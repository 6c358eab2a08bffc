#include "ffext/minute.hpp"

#include <numeric>
#include <stdexcept>

namespace ffext {

void MinuteQueryGL::validate() const {
    if (n <= 0) throw std::invalid_argument("MinuteQueryGL: n must be positive");
    if (static_cast<std::int64_t>(mu.size()) != n)
        throw std::invalid_argument("MinuteQueryGL: mu must have length n");
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i - 1] < mu[i])
            throw std::invalid_argument("MinuteQueryGL: mu must be weakly decreasing");
}

void MinuteQueryTypeA::validate() const {
    if (n <= 0) throw std::invalid_argument("MinuteQueryTypeA: n must be positive");
    if (i < 0 || i > n || i_prime < 0 || i_prime > n)
        throw std::invalid_argument("MinuteQueryTypeA: indices must lie in [0, n]");
}

namespace {

/// <mu, omega_m> = P_mu(m) - m|mu|/n, exact.
Rational gl_pairing(const MinuteQueryGL& q, std::int64_t m) {
    std::int64_t prefix = 0;
    for (std::int64_t i = 0; i < m; ++i) prefix += q.mu[static_cast<std::size_t>(i)];
    std::int64_t total = prefix;
    for (std::int64_t i = m; i < q.n; ++i) total += q.mu[static_cast<std::size_t>(i)];
    return Rational(prefix) - Rational(m * total, q.n);
}

/// theta_i(j) = min(i, j) - i*j/(n+1).
Rational theta(std::int64_t n, std::int64_t i, std::int64_t j) {
    return Rational(std::min(i, j)) - Rational(i * j, n + 1);
}

}  // namespace

MinuteResult fully_hn_gl(const MinuteQueryGL& q) {
    q.validate();
    MinuteResult res;
    for (std::int64_t m = 1; m < q.n; ++m)
        if (gl_pairing(q, m) > Rational(1)) res.violations.push_back(m);
    res.value = res.violations.empty();
    return res;
}

MinuteResult weakly_fully_hn_gl(const MinuteQueryGL& q) {
    q.validate();
    MinuteResult res;
    for (std::int64_t m = 1; m < q.n; ++m) {
        const Rational v = gl_pairing(q, m);
        if (v.is_integer() && v > Rational(1)) res.violations.push_back(m);
    }
    res.value = res.violations.empty();
    return res;
}

MinuteResult fully_hn_typeA(const MinuteQueryTypeA& q) {
    q.validate();
    MinuteResult res;
    for (std::int64_t j = 1; j <= q.n; ++j) {
        if (theta(q.n, q.i, j) + theta(q.n, q.i_prime, j).frac() > Rational(1))
            res.violations.push_back(j);
    }
    res.value = res.violations.empty();
    return res;
}

MinuteResult weakly_fully_hn_typeA(const MinuteQueryTypeA& q) {
    q.validate();
    MinuteResult res;
    for (std::int64_t j = 1; j <= q.n; ++j) {
        if (((q.i + q.i_prime) * j) % (q.n + 1) != 0) continue;
        if (theta(q.n, q.i, j) > Rational(1)) res.violations.push_back(j);
    }
    res.value = res.violations.empty();
    return res;
}

}  // namespace ffext

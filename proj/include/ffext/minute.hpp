#pragma once

#include <cstdint>
#include <vector>

#include "ffext/rational.hpp"

namespace ffext {

/// Split GL_n with a dominant integral cocharacter mu (weakly decreasing,
/// not necessarily minuscule). The relevant pairings are
/// <mu, omega_m> = P_mu(m) - m|mu|/n for 1 <= m < n.
struct MinuteQueryGL {
    std::int64_t n = 0;
    std::vector<std::int64_t> mu;  // length n, weakly decreasing

    void validate() const;
};

/// Adjoint group of type A_n (n >= 1) with mu = omega_i^ and an inner twist
/// xi = omega_{i'}^; index 0 means the trivial cocharacter. The pairing is
/// theta_i(j) = min(i, j) - i*j/(n+1).
struct MinuteQueryTypeA {
    std::int64_t n = 0;
    std::int64_t i = 0;
    std::int64_t i_prime = 0;

    void validate() const;
};

/// Boolean verdict plus, when false, the simple-root indices violating the
/// minute inequality.
struct MinuteResult {
    bool value = true;
    std::vector<std::int64_t> violations;
    explicit operator bool() const { return value; }
};

/// Full HN-decomposability of B(GL_n, mu) (xi = 0):
/// for all 1 <= m < n, P_mu(m) - m|mu|/n <= 1.
MinuteResult fully_hn_gl(const MinuteQueryGL& q);

/// Weak full HN-decomposability of (GL_n, mu) (xi = 0): the same bound is
/// required only at the m where P_mu(m) - m|mu|/n is an integer.
MinuteResult weakly_fully_hn_gl(const MinuteQueryGL& q);

/// Full HN-decomposability for the type-A inner form:
/// for all 1 <= j <= n, theta_i(j) + frac(theta_{i'}(j)) <= 1.
MinuteResult fully_hn_typeA(const MinuteQueryTypeA& q);

/// Weak version: the bound theta_i(j) <= 1 is required only at the j with
/// (n+1) | (i + i')*j.
MinuteResult weakly_fully_hn_typeA(const MinuteQueryTypeA& q);

}  // namespace ffext

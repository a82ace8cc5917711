#pragma once

#include <cstdint>
#include <numeric>

#include "sa/errors.hpp"

namespace sa {

// Canonical representative of a mod m in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// An element of Q/Z in lowest terms. Zero is always 0/1.
struct QZElem {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    friend bool operator==(const QZElem&, const QZElem&) = default;
};

inline QZElem make_qz(std::int64_t numerator, std::int64_t denominator) {
    if (denominator < 1) throw precondition_error("QZElem denominator must be positive");
    std::int64_t n = mod_floor(numerator, denominator);
    std::int64_t g = std::gcd(n, denominator);
    return QZElem{n / g, denominator / g};
}

inline QZElem qz_add(const QZElem& a, const QZElem& b) {
    std::int64_t l = std::lcm(a.denominator, b.denominator);
    return make_qz(a.numerator * (l / a.denominator) + b.numerator * (l / b.denominator), l);
}

inline QZElem qz_neg(const QZElem& a) { return make_qz(-a.numerator, a.denominator); }

// k-fold sum of a. k is reduced mod the denominator up front so the
// intermediate product stays small.
inline QZElem qz_scale(std::int64_t k, const QZElem& a) {
    return make_qz(mod_floor(k, a.denominator) * a.numerator, a.denominator);
}

// Additive order: the denominator once the fraction is in lowest terms.
inline std::int64_t qz_order(const QZElem& a) { return a.denominator; }

inline bool qz_is_zero(const QZElem& a) { return a.numerator == 0; }

// An element of Z/mZ, value kept in [0, m).
struct ZModM {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    friend bool operator==(const ZModM&, const ZModM&) = default;
};

inline ZModM make_zmod(std::int64_t value, std::int64_t modulus) {
    if (modulus < 1) throw precondition_error("ZModM modulus must be positive");
    return ZModM{mod_floor(value, modulus), modulus};
}

inline ZModM zm_add(const ZModM& a, const ZModM& b) {
    if (a.modulus != b.modulus) throw precondition_error("zm_add needs matching moduli");
    return make_zmod(a.value + b.value, a.modulus);
}

// Push a class down to a modulus dividing the current one.
inline ZModM zm_reduce(const ZModM& a, std::int64_t new_modulus) {
    if (new_modulus < 1 || a.modulus % new_modulus != 0)
        throw precondition_error("zm_reduce target modulus must divide the current one");
    return make_zmod(a.value, new_modulus);
}

// Whether target lies in the cyclic subgroup of Z/modulus generated by
// generator. Membership is divisibility by gcd(generator, modulus); note
// gcd(0, m) = m, so the subgroup generated by zero is {0}.
inline bool subgroup_contains(std::int64_t modulus, const ZModM& generator, const ZModM& target) {
    if (generator.modulus != modulus || target.modulus != modulus)
        throw precondition_error("subgroup_contains arguments must live in Z/modulus");
    std::int64_t g = std::gcd(generator.value, modulus);
    return target.value % g == 0;
}

}  // namespace sa

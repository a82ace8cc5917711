#pragma once

#include <cstdint>
#include <utility>

#include "sa/arith.hpp"
#include "sa/curve.hpp"
#include "sa/errors.hpp"

namespace sa {

// A constant Brauer class: one pulled back from the p-adic base field,
// identified with an element of Q/Z by the local invariant map.
struct BrauerClass {
    QZElem base_class;
    std::int64_t base_exponent;  // additive order of base_class

    explicit BrauerClass(QZElem cls) : base_class(cls), base_exponent(qz_order(cls)) {}

    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
};

// pi^r delta^s u^t presentation of a class in K_v^x / (K_v^x)^m for a
// 2-dimensional local field K_v with uniformizer pi, residue uniformizer
// delta and residue unit u.
struct SymbolH1 {
    std::int64_t modulus;
    ZModM r_pi;
    ZModM r_delta;
    ZModM r_u;

    SymbolH1(std::int64_t m, std::int64_t pi, std::int64_t delta, std::int64_t unit)
        : modulus(m), r_pi(make_zmod(pi, m)), r_delta(make_zmod(delta, m)), r_u(make_zmod(unit, m)) {}

    friend bool operator==(const SymbolH1&, const SymbolH1&) = default;
};

// r(delta,u) + s(pi,delta) + t(pi,u) presentation of a class in the
// m-torsion of Br(K_v). Only meaningful when K_v contains a primitive m-th
// root of unity; the operations below take that hypothesis as a flag.
struct SymbolH2 {
    std::int64_t modulus;
    ZModM c_du;
    ZModM c_pd;
    ZModM c_pu;

    SymbolH2(std::int64_t m, std::int64_t du, std::int64_t pd, std::int64_t pu)
        : modulus(m), c_du(make_zmod(du, m)), c_pd(make_zmod(pd, m)), c_pu(make_zmod(pu, m)) {}

    friend bool operator==(const SymbolH2&, const SymbolH2&) = default;
};

// Exponent of the class once pulled back to the function field K of the
// curve: the kernel of the pullback is cyclic of order index(X).
std::int64_t exponent_over_K(const BrauerClass& a, const Curve& c);

// Exponent of the class over the completion at v. Only the residue degree
// of the place enters.
std::int64_t local_exponent(const BrauerClass& a, const Place& v);

// A class over the base field with the same pullback to K as a, but of
// full exponent exponent_over_K(a, c) * index(X). The adjustment is taken
// from the pullback kernel; candidates are scanned in increasing numerator
// order, preferring adjustments of order exactly index(X), so the result
// is deterministic.
BrauerClass lift_to_full_exponent(const BrauerClass& a, const Curve& c);

// Pairing of a constant class with a divisor class: (deg z) times the
// class in Q/Z.
QZElem lichtenbaum_pair(const BrauerClass& a, const Divisor& z, const Curve& c);

// Residue of a symbol class: the ramified part (s, t). Needs the root of
// unity hypothesis.
std::pair<ZModM, ZModM> residue(const SymbolH2& x, bool has_primitive_root);

// Specialization by the square of the uniformizer: the unramified part r.
// Needs the root of unity hypothesis.
ZModM specialize(const SymbolH2& x, bool has_primitive_root);

// Embedding of a residue-field class as an unramified symbol, r -> (r,0,0).
SymbolH2 inflate(const ZModM& residue_field_class);

// Image of a unit-group symbol under the valuation, the residue of the
// split H^1 sequence.
ZModM valuation_class(const SymbolH1& x);

// Contribution of one place to the global pairing: residue of the cup
// product with the uniformizer power, followed by corestriction. On
// constant classes the composite multiplies by valuation * deg(v).
QZElem rost_residue(const BrauerClass& a, const Place& v, std::int64_t valuation);

}  // namespace sa

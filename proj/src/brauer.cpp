#include "sa/brauer.hpp"

#include <numeric>

namespace sa {

std::int64_t exponent_over_K(const BrauerClass& a, const Curve& c) {
    return a.base_exponent / std::gcd(c.index(), a.base_exponent);
}

std::int64_t local_exponent(const BrauerClass& a, const Place& v) {
    return a.base_exponent / std::gcd(v.degree, a.base_exponent);
}

BrauerClass lift_to_full_exponent(const BrauerClass& a, const Curve& c) {
    const std::int64_t ix = c.index();
    const std::int64_t target = exponent_over_K(a, c) * ix;
    // The pullback kernel is generated by 1/index(X); adjusting within it
    // keeps the class over K unchanged.
    auto candidate = [&](std::int64_t j) { return qz_add(a.base_class, make_qz(j, ix)); };
    for (std::int64_t j = 0; j < ix; ++j) {
        if (std::gcd(j, ix) != 1) continue;  // adjustment of order exactly index(X)
        QZElem lifted = candidate(j);
        if (qz_order(lifted) == target) return BrauerClass(lifted);
    }
    // An order-exactly-index adjustment does not always exist (take the
    // class 1/2 with index 2: the only such adjustment cancels it). Any
    // kernel element is just as good for the postcondition, so fall back
    // to the full kernel scan.
    for (std::int64_t j = 0; j < ix; ++j) {
        QZElem lifted = candidate(j);
        if (qz_order(lifted) == target) return BrauerClass(lifted);
    }
    throw model_inconsistency_error("no kernel adjustment reaches the full exponent");
}

QZElem lichtenbaum_pair(const BrauerClass& a, const Divisor& z, const Curve& c) {
    return qz_scale(divisor_degree(c, z), a.base_class);
}

namespace {

void require_root_of_unity(bool has_primitive_root) {
    if (!has_primitive_root)
        throw hypothesis_error(
            "the symbol presentation needs a primitive m-th root of unity in the local field");
}

}  // namespace

std::pair<ZModM, ZModM> residue(const SymbolH2& x, bool has_primitive_root) {
    require_root_of_unity(has_primitive_root);
    return {x.c_pd, x.c_pu};
}

ZModM specialize(const SymbolH2& x, bool has_primitive_root) {
    require_root_of_unity(has_primitive_root);
    return x.c_du;
}

SymbolH2 inflate(const ZModM& residue_field_class) {
    return SymbolH2(residue_field_class.modulus, residue_field_class.value, 0, 0);
}

ZModM valuation_class(const SymbolH1& x) { return x.r_pi; }

QZElem rost_residue(const BrauerClass& a, const Place& v, std::int64_t valuation) {
    return qz_scale(valuation * v.degree, a.base_class);
}

}  // namespace sa

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sa/rost.hpp"

using namespace sa;

namespace {

// The projective line with a quaternion-style constant class: index 1,
// places of degrees 1,1,2,3,4,6, class of order 2.
SAProblem quaternion_problem(std::set<std::string> excluded) {
    Curve c(1,
            {Place{"infty", 1}, Place{"t", 1}, Place{"t^2-p", 2}, Place{"t^3-p", 3},
             Place{"t^4-p", 4}, Place{"t^6-p", 6}},
            Pic0Trivial::every());
    return SAProblem(std::move(c), BrauerClass(make_qz(1, 2)), std::move(excluded));
}

AdelicClass single(const SAProblem& p, const std::string& id, std::int64_t n) {
    AdelicClass a;
    a.entries.emplace(id, make_zmod(n, p.local_modulus(p.curve().place(id))));
    return a;
}

}  // namespace

TEST_CASE("problem construction checks the hypothesis and the excluded ids") {
    Curve c(1, {Place{"a", 1}}, Pic0Trivial::only({3}));
    CHECK_THROWS_AS(SAProblem(c, BrauerClass(make_qz(1, 2)), {}), hypothesis_error);
    CHECK_NOTHROW(SAProblem(c, BrauerClass(make_qz(1, 3)), {}));
    CHECK_NOTHROW(SAProblem(c, BrauerClass(make_qz(0, 1)), {}));  // m = 1 is vacuous
    CHECK_THROWS_AS(SAProblem(c, BrauerClass(make_qz(1, 3)), {"nowhere"}), validation_error);
}

TEST_CASE("pairing values of adelic classes") {
    const SAProblem p = quaternion_problem({"t^2-p", "t^4-p", "t^6-p"});
    CHECK(f_H(p, single(p, "t", 1)).reduced == make_zmod(1, 2));
    CHECK(f_H(p, AdelicClass{}).total == make_zmod(0, 2));
    CHECK(f_H(p, AdelicClass{}).reduced == make_zmod(0, 2));

    AdelicClass two_places = single(p, "t", 1);
    two_places.entries.emplace("t^3-p", make_zmod(1, p.local_modulus(p.curve().place("t^3-p"))));
    CHECK(f_H(p, two_places).reduced == make_zmod(0, 2));  // 1*1 + 1*3 = 4 = 0 mod 2

    CHECK_THROWS_AS(f_H(p, single(p, "t^2-p", 0)), validation_error);  // supported on S
    AdelicClass bad;
    bad.entries.emplace("t", make_zmod(0, 5));
    CHECK_THROWS_AS(f_H(p, bad), validation_error);  // wrong modulus
    AdelicClass unknown;
    unknown.entries.emplace("nowhere", make_zmod(0, 2));
    CHECK_THROWS_AS(f_H(p, unknown), lookup_error);
}

TEST_CASE("the pairing is a homomorphism") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t ix = 1 + static_cast<std::int64_t>(rng() % 3);
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 8);
        std::vector<Place> places;
        for (std::int64_t d = 1; d <= 4; ++d)
            places.push_back(Place{"w" + std::to_string(d), ix * d});
        SAProblem p(Curve(ix, places, Pic0Trivial::every()), BrauerClass(make_qz(1, m * ix)), {});
        AdelicClass a, b;
        for (const auto& [id, v] : p.curve().places()) {
            const std::int64_t mv = p.local_modulus(v);
            a.entries.emplace(id, make_zmod(static_cast<std::int64_t>(rng() % 100), mv));
            b.entries.emplace(id, make_zmod(static_cast<std::int64_t>(rng() % 100), mv));
        }
        CHECK(f_H(p, adelic_add(a, b)).total == zm_add(f_H(p, a).total, f_H(p, b).total));
        CHECK(f_H(p, adelic_add(a, b)).reduced == zm_add(f_H(p, a).reduced, f_H(p, b).reduced));
    }
}

TEST_CASE("divisors of degree divisible by the full exponent pair to zero") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t ix = 1 + static_cast<std::int64_t>(rng() % 4);
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
        std::vector<Place> places{Place{"adj", ix}, Place{"s0", ix}};
        for (std::int64_t d = 2; d <= 4; ++d)
            places.push_back(Place{"w" + std::to_string(d), ix * d});
        SAProblem p(Curve(ix, places, Pic0Trivial::every()), BrauerClass(make_qz(1, m * ix)),
                    {"s0"});
        std::map<std::string, std::int64_t> coeffs;
        std::int64_t partial = 0;
        for (std::int64_t d = 2; d <= 4; ++d) {
            const std::int64_t n = static_cast<std::int64_t>(rng() % 101) - 50;
            coeffs["w" + std::to_string(d)] = n;
            partial += n * ix * d;
        }
        coeffs["adj"] = mod_floor(-(partial / ix), m);
        const Divisor z = make_divisor(coeffs);
        REQUIRE(divisor_degree(p.curve(), z) % (m * ix) == 0);
        const FHValue value = f_H(p, adelic_from_divisor(p, z));
        CHECK(value.total.value == 0);
        CHECK(value.reduced.value == 0);
    }
}

TEST_CASE("the quaternion example fails away from even-degree places") {
    const SAProblem p = quaternion_problem({"t^2-p", "t^4-p", "t^6-p"});
    const SAVerdict verdict = decide_sa(p);
    CHECK_FALSE(verdict.holds);
    CHECK(verdict.defect_order == 2);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->entries.size() == 1);
    const auto& [id, value] = *verdict.witness->entries.begin();
    CHECK(p.curve().place(id).degree == 1);
    CHECK(value == make_zmod(1, 2));
    CHECK_FALSE(global_image_contains(p, *verdict.witness));
    CHECK_FALSE(verdict.witness_note.has_value());
}

TEST_CASE("including a degree-1 place in S restores approximation") {
    const SAProblem p = quaternion_problem({"t", "t^2-p"});
    const SAVerdict verdict = decide_sa(p);
    CHECK(verdict.holds);
    CHECK(verdict.defect_order == 1);
    CHECK_FALSE(verdict.witness.has_value());
}

TEST_CASE("defect order six splits as gcd") {
    // I(S)/I(X) = 4 against exponent 6 leaves a defect of order 2.
    Curve c(1, {Place{"a", 1}, Place{"s", 4}}, Pic0Trivial::every());
    SAProblem p(std::move(c), BrauerClass(make_qz(1, 6)), {"s"});
    const SAVerdict verdict = decide_sa(p);
    CHECK_FALSE(verdict.holds);
    CHECK(verdict.defect_order == 2);
    REQUIRE(verdict.witness.has_value());
    const auto& [id, value] = *verdict.witness->entries.begin();
    CHECK(id == "a");
    CHECK(value == make_zmod(1, 6));
    // The witness value 1 is outside the subgroup generated by 4 in Z/6.
    CHECK(oracles::cyclic_subgroup(4, 6) == std::set<std::int64_t>{0, 2, 4});
    CHECK_FALSE(global_image_contains(p, *verdict.witness));
}

TEST_CASE("decide_sa needs a non-empty excluded set") {
    const SAProblem p = quaternion_problem({});
    CHECK_THROWS_AS(decide_sa(p), domain_error);
    CHECK_THROWS_AS(construct_witness(p), domain_error);
}

TEST_CASE("no witness is constructed when approximation holds") {
    const SAProblem p = quaternion_problem({"t"});
    CHECK_THROWS_AS(construct_witness(p), precondition_error);
}

TEST_CASE("a registry without odd degrees off S cannot exhibit the defect") {
    Curve c(1, {Place{"s", 2}, Place{"w4", 4}, Place{"w6", 6}}, Pic0Trivial::every());
    SAProblem p(std::move(c), BrauerClass(make_qz(1, 2)), {"s"});
    const SAVerdict verdict = decide_sa(p);
    CHECK_FALSE(verdict.holds);
    CHECK(verdict.defect_order == 2);
    CHECK_FALSE(verdict.witness.has_value());
    REQUIRE(verdict.witness_note.has_value());
    CHECK(verdict.witness_note->find("too small") != std::string::npos);
}

TEST_CASE("reachability matches membership in the completion subgroup") {
    const SAProblem p = quaternion_problem({"t^2-p", "t^4-p", "t^6-p"});
    CHECK_FALSE(global_image_contains(p, single(p, "t", 1)));
    AdelicClass even = single(p, "t", 1);
    even.entries.emplace("infty", make_zmod(1, 2));
    CHECK(global_image_contains(p, even));
    CHECK(global_image_contains(p, AdelicClass{}));
}

TEST_CASE("with S empty only the kernel of the pairing is reachable") {
    const SAProblem p = quaternion_problem({});
    CHECK_FALSE(global_image_contains(p, single(p, "t", 1)));
    AdelicClass pair = single(p, "t", 1);
    pair.entries.emplace("infty", make_zmod(1, 2));
    CHECK(global_image_contains(p, pair));
}

TEST_CASE("enumeration oracle on the quaternion example") {
    const SAProblem p = quaternion_problem({"t^2-p", "t^4-p", "t^6-p"});
    const ExactnessReport report = verify_exact_sequence(p, {"infty", "t"});
    CHECK(report.pass);
    CHECK(report.label == "finite-support shadow check");
    CHECK(report.tuples == 4);
    CHECK(report.global_count == 2);
    CHECK(report.defect_order == 2);
    CHECK(report.covered_defect_values == std::vector<std::int64_t>{0, 1});
    CHECK_FALSE(report.counterexample.has_value());
}

TEST_CASE("enumeration oracle with mixed moduli") {
    Curve c(1, {Place{"a", 2}, Place{"b", 3}, Place{"s", 6}}, Pic0Trivial::every());
    SAProblem p(std::move(c), BrauerClass(make_qz(1, 6)), {"s"});
    const ExactnessReport report = verify_exact_sequence(p, {"a", "b"});
    CHECK(report.pass);
    CHECK(report.tuples == 6);  // Z/3 x Z/2
    CHECK(report.global_count == 1);
    CHECK(report.defect_order == 6);
    CHECK(report.covered_defect_values.size() == 6);
}

TEST_CASE("enumeration oracle with empty support passes vacuously") {
    const SAProblem p = quaternion_problem({"t^2-p"});
    const ExactnessReport report = verify_exact_sequence(p, std::vector<std::string>{});
    CHECK(report.pass);
    CHECK(report.tuples == 1);
    CHECK(report.global_count == 1);
    CHECK(report.covered_defect_values == std::vector<std::int64_t>{0});
}

TEST_CASE("enumeration oracle validates support and budget") {
    const SAProblem p = quaternion_problem({"t^2-p"});
    CHECK_THROWS_AS(verify_exact_sequence(p, {"t^2-p"}), validation_error);
    CHECK_THROWS_AS(verify_exact_sequence(p, {"t", "t"}), validation_error);
    CHECK_THROWS_AS(verify_exact_sequence(p, {"nowhere"}), lookup_error);
    CHECK_THROWS_AS(verify_exact_sequence(p, {"infty", "t"}, 3), resource_error);
    const SAProblem empty_s = quaternion_problem({});
    CHECK_THROWS_AS(verify_exact_sequence(empty_s, {"t"}), domain_error);
}

TEST_CASE("enumeration oracle is independent of the worker count") {
    Curve c(1, {Place{"a", 1}, Place{"b", 2}, Place{"d", 3}, Place{"s", 4}}, Pic0Trivial::every());
    SAProblem p(std::move(c), BrauerClass(make_qz(1, 12)), {"s"});
    const ExactnessReport serial = verify_exact_sequence(p, {"a", "b", "d"}, 1000000, 1);
    for (int workers : {2, 3, 4, 7}) {
        const ExactnessReport parallel = verify_exact_sequence(p, {"a", "b", "d"}, 1000000, workers);
        CHECK(serial == parallel);
    }
    CHECK(serial.pass);
}

TEST_CASE("the defect formula matches the enumerated defect values") {
    for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t ix = 1; ix <= 3; ++ix)
            for (std::int64_t is = ix; is <= 8; is += ix) {
                std::vector<Place> places{Place{"p1", ix}, Place{"p2", 2 * ix},
                                          Place{"p3", 3 * ix}, Place{"s0", is}};
                SAProblem p(Curve(ix, places, Pic0Trivial::every()),
                            BrauerClass(make_qz(1, m * ix)), {"s0"});
                const SAVerdict verdict = decide_sa(p);
                CHECK(verdict.defect_order == std::gcd(is / ix, m));
                const ExactnessReport report = verify_exact_sequence(p, {"p1", "p2", "p3"});
                CHECK(report.pass);
                CHECK(static_cast<std::int64_t>(report.covered_defect_values.size()) ==
                      verdict.defect_order);
                if (!verdict.holds && verdict.witness)
                    CHECK_FALSE(global_image_contains(p, *verdict.witness));
            }
}

TEST_CASE("the bounded-support overload walks places in id order") {
    const SAProblem p = quaternion_problem({"t^2-p", "t^4-p", "t^6-p"});
    const ExactnessReport report = verify_exact_sequence(p, std::int64_t{2});
    CHECK(report.support == std::vector<std::string>{"infty", "t"});
    CHECK(report.pass);
}

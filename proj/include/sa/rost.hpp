#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sa/brauer.hpp"
#include "sa/curve.hpp"
#include "sa/errors.hpp"

namespace sa {

// A finitely supported tuple of local classes, entry at v living in
// Z/m_v where m_v is the local exponent at v.
struct AdelicClass {
    std::map<std::string, ZModM> entries;

    friend bool operator==(const AdelicClass&, const AdelicClass&) = default;
};

// Entrywise sum. Missing entries count as zero; moduli must agree on the
// common support.
AdelicClass adelic_add(const AdelicClass& a, const AdelicClass& b);

// One strong-approximation question: the curve, the constant class, and
// the excluded set S of places. Construction checks that every excluded id
// is registered and that Pic^0(X)/m = 0 is declared for the exponent m of
// the class over the function field.
class SAProblem {
public:
    SAProblem(Curve curve, BrauerClass brauer, std::set<std::string> excluded);

    const Curve& curve() const { return curve_; }
    const BrauerClass& brauer() const { return brauer_; }
    const std::set<std::string>& excluded() const { return excluded_; }

    std::int64_t exponent() const { return exponent_; }       // m
    std::int64_t index() const { return curve_.index(); }     // I(X)
    std::int64_t local_modulus(const Place& v) const { return local_exponent(brauer_, v); }
    bool is_excluded(const std::string& id) const { return excluded_.count(id) > 0; }

private:
    Curve curve_;
    BrauerClass brauer_;
    std::set<std::string> excluded_;
    std::int64_t exponent_;
};

// Value of the summed pairing: total lives mod m*I(X); every term is
// divisible by I(X), so the value divided by I(X) is reported mod m.
struct FHValue {
    ZModM total;
    ZModM reduced;

    friend bool operator==(const FHValue&, const FHValue&) = default;
};

// sum over the support of n_v * deg(v). Well defined on classes because
// m*I(X) divides m_v * deg(v) for every registered place.
FHValue f_H(const SAProblem& p, const AdelicClass& a);

// The adelic class induced by an S-avoiding divisor: each coefficient
// reduced mod the local exponent at its place.
AdelicClass adelic_from_divisor(const SAProblem& p, const Divisor& z);

// Whether the class is reachable from a global one: its pairing value,
// divided by I(X), lies in the subgroup of Z/m generated by I(S)/I(X).
// With S empty that subgroup is {0}.
bool global_image_contains(const SAProblem& p, const AdelicClass& a);

struct SAVerdict {
    bool holds = true;
    std::int64_t defect_order = 1;
    std::optional<AdelicClass> witness;          // present only when holds is false
    std::optional<std::string> witness_note;     // set when no registered place exhibits one

    friend bool operator==(const SAVerdict&, const SAVerdict&) = default;
};

// Decides strong approximation away from S. The defect group is cyclic of
// order gcd(I(S)/I(X), m); approximation holds exactly when that order is 1.
SAVerdict decide_sa(const SAProblem& p);

// A single-place class outside the global image: places off S are scanned
// in id order, values in increasing order, and the first class whose
// pairing value escapes the subgroup generated by I(S)/I(X) is returned.
// Requires a nontrivial defect.
AdelicClass construct_witness(const SAProblem& p);

// Outcome of the brute-force enumeration over a finite support.
struct ExactnessReport {
    bool pass = false;
    std::string label = "finite-support shadow check";
    std::vector<std::string> support;                 // sorted place ids
    std::int64_t tuples = 0;                          // classes enumerated
    std::int64_t global_count = 0;                    // classes flagged reachable
    std::vector<std::int64_t> covered_defect_values;  // sorted, in Z/defect_order
    std::int64_t defect_order = 1;                    // gcd(I(S)/I(X), m)
    std::string failure;                              // empty when pass
    std::optional<std::vector<std::int64_t>> counterexample;  // first failing tuple

    friend bool operator==(const ExactnessReport&, const ExactnessReport&) = default;
};

// Exhaustively enumerates every class supported on the given places (all
// off S) and checks, against the closed-form predictions: that the pairing
// values together with the S-completions fill the expected subgroup of
// Z/m, that the classes flagged reachable are exactly the kernel of the
// composite map to Z/defect_order, and that the counts multiply out.
// Enumeration is in lexicographic order; the first counterexample tuple is
// reported on failure. The product of the local moduli must stay within
// budget. workers = 0 picks a thread count automatically; results do not
// depend on it.
ExactnessReport verify_exact_sequence(const SAProblem& p, std::vector<std::string> support,
                                      std::int64_t budget = 1000000, int workers = 0);

// Same check on the first support_bound places off S in id order.
ExactnessReport verify_exact_sequence(const SAProblem& p, std::int64_t support_bound,
                                      std::int64_t budget = 1000000, int workers = 0);

}  // namespace sa

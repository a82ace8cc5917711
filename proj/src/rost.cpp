#include "sa/rost.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>

namespace sa {

AdelicClass adelic_add(const AdelicClass& a, const AdelicClass& b) {
    AdelicClass out = a;
    for (const auto& [id, cls] : b.entries) {
        auto it = out.entries.find(id);
        if (it == out.entries.end())
            out.entries.emplace(id, cls);
        else
            it->second = zm_add(it->second, cls);
    }
    return out;
}

SAProblem::SAProblem(Curve curve, BrauerClass brauer, std::set<std::string> excluded)
    : curve_(std::move(curve)), brauer_(std::move(brauer)), excluded_(std::move(excluded)) {
    for (const auto& id : excluded_) {
        if (!curve_.has_place(id))
            throw validation_error("excluded_places", "unknown place id '" + id + "'");
    }
    exponent_ = exponent_over_K(brauer_, curve_);
    if (!curve_.pic0_trivial_mod(exponent_))
        throw hypothesis_error("Pic^0(X)/m = 0 is not declared for m = " +
                               std::to_string(exponent_));
}

namespace {

void validate_class(const SAProblem& p, const AdelicClass& a) {
    for (const auto& [id, cls] : a.entries) {
        const Place& v = p.curve().place(id);  // lookup_error on unknown ids
        if (p.is_excluded(id))
            throw validation_error("adelic class is supported on the excluded place '" + id + "'");
        const std::int64_t mv = p.local_modulus(v);
        if (cls.modulus != mv)
            throw validation_error("entry at '" + id + "' has modulus " +
                                   std::to_string(cls.modulus) + ", expected the local exponent " +
                                   std::to_string(mv));
    }
}

// I(S)/I(X) reduced into Z/m; the subgroup it generates is what the
// completions at S can contribute. Empty S contributes nothing.
ZModM completion_generator(const SAProblem& p) {
    std::int64_t ratio = 0;
    if (!p.excluded().empty()) {
        const std::int64_t is = index_of_set(p.curve(), p.excluded());
        if (is % p.index() != 0)
            throw model_inconsistency_error("index of S is not divisible by the curve index");
        ratio = is / p.index();
    }
    return make_zmod(ratio, p.exponent());
}

}  // namespace

FHValue f_H(const SAProblem& p, const AdelicClass& a) {
    validate_class(p, a);
    const std::int64_t big = p.exponent() * p.index();
    std::int64_t sum = 0;
    for (const auto& [id, cls] : a.entries) {
        const Place& v = p.curve().place(id);
        sum = mod_floor(sum + (cls.value % big) * (v.degree % big), big);
    }
    // Every registered degree is a multiple of I(X), hence so is the sum.
    return FHValue{make_zmod(sum, big), make_zmod(sum / p.index(), p.exponent())};
}

AdelicClass adelic_from_divisor(const SAProblem& p, const Divisor& z) {
    AdelicClass a;
    for (const auto& [id, n] : z.coefficients) {
        const Place& v = p.curve().place(id);
        if (p.is_excluded(id))
            throw validation_error("divisor meets the excluded place '" + id + "'");
        a.entries.emplace(id, make_zmod(n, p.local_modulus(v)));
    }
    return a;
}

bool global_image_contains(const SAProblem& p, const AdelicClass& a) {
    const ZModM gen = completion_generator(p);
    return subgroup_contains(p.exponent(), gen, f_H(p, a).reduced);
}

SAVerdict decide_sa(const SAProblem& p) {
    if (p.excluded().empty()) throw domain_error("the excluded set S must be non-empty");
    const std::int64_t defect = std::gcd(completion_generator(p).value, p.exponent());
    SAVerdict verdict;
    verdict.holds = defect == 1;
    verdict.defect_order = defect;
    if (!verdict.holds) {
        try {
            verdict.witness = construct_witness(p);
        } catch (const witness_not_found_error& e) {
            verdict.witness_note = e.what();
        }
    }
    return verdict;
}

AdelicClass construct_witness(const SAProblem& p) {
    if (p.excluded().empty()) throw domain_error("the excluded set S must be non-empty");
    const std::int64_t m = p.exponent();
    const std::int64_t ratio = index_of_set(p.curve(), p.excluded()) / p.index();
    if (std::gcd(ratio, m) == 1)
        throw precondition_error("strong approximation holds, no witness exists");
    const ZModM gen = make_zmod(ratio, m);
    for (const auto& [id, v] : p.curve().places()) {
        if (p.is_excluded(id)) continue;
        const std::int64_t mv = p.local_modulus(v);
        const std::int64_t step = v.degree / p.index();
        for (std::int64_t n = 1; n < mv; ++n) {
            if (subgroup_contains(m, gen, make_zmod(n * step, m))) continue;
            AdelicClass witness;
            witness.entries.emplace(id, make_zmod(n, mv));
            if (global_image_contains(p, witness))
                throw model_inconsistency_error("witness candidate is unexpectedly reachable");
            return witness;
        }
    }
    throw witness_not_found_error(
        "no registered place outside S realizes a class outside the global image; the registered "
        "sample is too small to exhibit the defect");
}

namespace {

// Digits of idx in the mixed-radix system given by moduli, most
// significant first, so numeric order of idx is lexicographic order of
// tuples.
std::vector<std::int64_t> decode_tuple(std::int64_t idx, const std::vector<std::int64_t>& moduli) {
    std::vector<std::int64_t> digits(moduli.size(), 0);
    for (std::size_t i = moduli.size(); i-- > 0;) {
        digits[i] = idx % moduli[i];
        idx /= moduli[i];
    }
    return digits;
}

struct OracleShard {
    std::vector<char> achieved;        // reduced pairing values hit, indexed in Z/m
    std::vector<char> covered;         // defect values hit, indexed in Z/defect
    std::int64_t global_count = 0;
    std::int64_t first_violation = -1;  // tuple index of the first kernel mismatch
};

}  // namespace

ExactnessReport verify_exact_sequence(const SAProblem& p, std::vector<std::string> support,
                                      std::int64_t budget, int workers) {
    if (p.excluded().empty()) throw domain_error("the excluded set S must be non-empty");
    if (budget < 1) throw precondition_error("budget must be positive");
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw validation_error("oracle.support", "duplicate place id");

    const std::int64_t m = p.exponent();
    const ZModM gen = completion_generator(p);
    const std::int64_t defect = std::gcd(gen.value, m);

    std::vector<std::int64_t> moduli;
    std::vector<const Place*> places;
    std::int64_t total = 1;
    for (const auto& id : support) {
        const Place& v = p.curve().place(id);
        if (p.is_excluded(id))
            throw validation_error("oracle.support", "place '" + id + "' lies in the excluded set");
        const std::int64_t mv = p.local_modulus(v);
        if (total > budget / mv)
            throw resource_error("enumeration of " + std::to_string(total) + " x " +
                                 std::to_string(mv) + " classes exceeds the budget of " +
                                 std::to_string(budget));
        total *= mv;
        moduli.push_back(mv);
        places.push_back(&v);
    }

    auto run_range = [&](std::int64_t lo, std::int64_t hi, OracleShard& shard) {
        shard.achieved.assign(static_cast<std::size_t>(m), 0);
        shard.covered.assign(static_cast<std::size_t>(defect), 0);
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            const std::vector<std::int64_t> digits = decode_tuple(idx, moduli);
            AdelicClass cls;
            for (std::size_t i = 0; i < digits.size(); ++i)
                cls.entries.emplace(places[i]->id, make_zmod(digits[i], moduli[i]));
            const ZModM reduced = f_H(p, cls).reduced;
            const bool global = global_image_contains(p, cls);
            const std::int64_t defect_value = reduced.value % defect;
            shard.achieved[static_cast<std::size_t>(reduced.value)] = 1;
            shard.covered[static_cast<std::size_t>(defect_value)] = 1;
            if (global) ++shard.global_count;
            if ((defect_value == 0) != global && shard.first_violation < 0)
                shard.first_violation = idx;
        }
    };

    int nworkers = workers;
    if (nworkers <= 0)
        nworkers = total >= 4096
                       ? static_cast<int>(std::min<unsigned>(
                             4, std::max(1u, std::thread::hardware_concurrency())))
                       : 1;
    nworkers = static_cast<int>(std::min<std::int64_t>(nworkers, total));
    if (nworkers < 1) nworkers = 1;

    std::vector<OracleShard> shards(static_cast<std::size_t>(nworkers));
    if (nworkers == 1) {
        run_range(0, total, shards[0]);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(nworkers));
        const std::int64_t chunk = (total + nworkers - 1) / nworkers;
        for (int w = 0; w < nworkers; ++w) {
            const std::int64_t lo = w * chunk;
            const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
            threads.emplace_back([&, w, lo, hi] {
                try {
                    run_range(lo, hi, shards[static_cast<std::size_t>(w)]);
                } catch (...) {
                    failures[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    OracleShard merged;
    merged.achieved.assign(static_cast<std::size_t>(m), 0);
    merged.covered.assign(static_cast<std::size_t>(defect), 0);
    for (const auto& s : shards) {
        if (s.achieved.empty()) continue;
        for (std::int64_t i = 0; i < m; ++i) merged.achieved[i] |= s.achieved[i];
        for (std::int64_t i = 0; i < defect; ++i) merged.covered[i] |= s.covered[i];
        merged.global_count += s.global_count;
        if (s.first_violation >= 0 &&
            (merged.first_violation < 0 || s.first_violation < merged.first_violation))
            merged.first_violation = s.first_violation;
    }

    ExactnessReport report;
    report.support = support;
    report.tuples = total;
    report.global_count = merged.global_count;
    report.defect_order = defect;
    for (std::int64_t i = 0; i < defect; ++i)
        if (merged.covered[i]) report.covered_defect_values.push_back(i);

    if (merged.first_violation >= 0) {
        report.pass = false;
        report.failure = "a class disagrees with the reachability predicate";
        report.counterexample = decode_tuple(merged.first_violation, moduli);
        return report;
    }

    // Expected image: pairing values plus S-completions fill the subgroup
    // generated by the support degrees over I(X) together with I(S)/I(X).
    std::int64_t expected_gen = std::gcd(m, gen.value);
    for (const Place* v : places) expected_gen = std::gcd(expected_gen, v->degree / p.index());
    std::vector<char> with_completions(static_cast<std::size_t>(m), 0);
    const std::int64_t completion_step = defect;  // subgroup generated by I(S)/I(X)
    for (std::int64_t x = 0; x < m; ++x) {
        if (!merged.achieved[static_cast<std::size_t>(x)]) continue;
        for (std::int64_t y = 0; y < m; y += completion_step)
            with_completions[static_cast<std::size_t>((x + y) % m)] = 1;
    }
    for (std::int64_t x = 0; x < m; ++x) {
        const bool expected = x % expected_gen == 0;
        if (with_completions[static_cast<std::size_t>(x)] != (expected ? 1 : 0)) {
            report.pass = false;
            report.failure = "the image with S-completions differs from the expected subgroup";
            return report;
        }
    }

    if (report.tuples !=
        report.global_count * static_cast<std::int64_t>(report.covered_defect_values.size())) {
        report.pass = false;
        report.failure = "class counts do not match the kernel-image factorization";
        return report;
    }

    report.pass = true;
    return report;
}

ExactnessReport verify_exact_sequence(const SAProblem& p, std::int64_t support_bound,
                                      std::int64_t budget, int workers) {
    if (support_bound < 0) throw precondition_error("support_bound must be non-negative");
    std::vector<std::string> support;
    for (const auto& [id, v] : p.curve().places()) {
        if (p.is_excluded(id)) continue;
        if (static_cast<std::int64_t>(support.size()) == support_bound) break;
        support.push_back(id);
    }
    return verify_exact_sequence(p, std::move(support), budget, workers);
}

}  // namespace sa

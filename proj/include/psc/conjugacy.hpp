#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psc/pfaffian.hpp"
#include "psc/pseudocharacter.hpp"
#include "psc/representation.hpp"

namespace psc {

struct ConjugacyOptions {
    long long budget = 2'000'000;
    std::uint64_t seed = 1;
};

/// The first invariant found to differ, in deterministic scan order.
struct DistinguishingInvariant {
    std::string kind;        // "trace", "lambda", "pl"
    std::vector<int> tuple;  // element indices; a single element for trace/lambda
    Rational left;
    Rational right;
};

struct ConjugacyVerdict {
    bool element_conjugate = true;
    std::optional<int> element_witness;  // element where cyclic restrictions differ
    std::optional<DistinguishingInvariant> element_detail;

    bool globally_conjugate = true;
    bool global_sampled = false;  // budget-truncated scan: not a proof of conjugacy
    std::optional<DistinguishingInvariant> global_detail;
};

namespace detail {

inline std::vector<Rational> family_lambda(const Representation& rep, RepFamily family) {
    std::vector<Rational> out;
    out.reserve(rep.images.size());
    for (const auto& m : rep.images) {
        const SimilitudeClass c = classify_similitude(m);
        switch (family) {
            case RepFamily::O:
            case RepFamily::GO:
                if (!c.orthogonal_lambda)
                    throw InvalidArgumentError("image is not an orthogonal similitude");
                out.push_back(*c.orthogonal_lambda);
                break;
            case RepFamily::Sp:
            case RepFamily::GSp:
                if (!c.symplectic_lambda)
                    throw InvalidArgumentError("image is not a symplectic similitude");
                out.push_back(*c.symplectic_lambda);
                break;
            default:
                out.push_back(Rational(1));
        }
    }
    return out;
}

// Scan sorted multisets (pl is symmetric in its arguments, so sorted tuples
// cover all tuples) in lexicographic order, stopping at the budget. fn
// returns true to stop early. Returns false when the budget truncated the
// enumeration.
template <typename Fn>
bool scan_sorted_tuples(int order, int arity, long long max_tuples, Fn&& fn) {
    std::vector<int> tuple(arity, 0);
    long long used = 0;
    for (;;) {
        if (used >= max_tuples) return false;
        ++used;
        if (fn(static_cast<const std::vector<int>&>(tuple))) return true;
        int pos = arity - 1;
        while (pos >= 0 && tuple[pos] == order - 1) --pos;
        if (pos < 0) return true;
        const int v = tuple[pos] + 1;
        for (int i = pos; i < arity; ++i) tuple[i] = v;
    }
}

inline Rational pl_of_tuple(const Representation& rep, std::span<const int> tuple) {
    std::vector<Matrix> args;
    args.reserve(tuple.size());
    for (int g : tuple) args.push_back(rep.images[g]);
    return linearized_pfaffian(args);
}

} // namespace detail

/// Element-conjugacy and global-conjugacy decision for two representations
/// of one finite group, using pseudocharacter data for the given family.
///
/// Element-conjugacy compares the cyclic restrictions: traces on all powers
/// of each element plus the similitude factor, and for even SO additionally
/// the linearized Pfaffians on all power multisets. Global conjugacy is
/// pseudocharacter equality, with the even-SO pl scan budget-limited; a
/// truncated scan that found no distinction reports global_sampled and is
/// never a proof.
inline ConjugacyVerdict compare_representations(const Representation& r1,
                                                const Representation& r2, RepFamily family,
                                                const ConjugacyOptions& opts = {}) {
    if (!(r1.group == r2.group)) throw InvalidArgumentError("representations over different groups");
    if (r1.dim != r2.dim) throw DimensionError("representations of different dimensions");
    const FiniteGroup& grp = r1.group;
    const bool so_even = family == RepFamily::SO && r1.dim % 2 == 0;
    const int half = r1.dim / 2;

    std::vector<Rational> tr1, tr2;
    tr1.reserve(grp.order());
    tr2.reserve(grp.order());
    for (int g = 0; g < grp.order(); ++g) {
        tr1.push_back(trace(r1.images[g]));
        tr2.push_back(trace(r2.images[g]));
    }
    const bool carries_lambda = family == RepFamily::O || family == RepFamily::GO ||
                                family == RepFamily::Sp || family == RepFamily::GSp;
    std::vector<Rational> lam1, lam2;
    if (carries_lambda) {
        lam1 = detail::family_lambda(r1, family);
        lam2 = detail::family_lambda(r2, family);
    }

    ConjugacyVerdict verdict;

    // --- element-conjugacy: cyclic restrictions ---
    for (int g = 0; g < grp.order() && verdict.element_conjugate; ++g) {
        const int ord = grp.elem_order(g);
        std::vector<int> powers(ord);
        int acc = grp.identity();
        for (int m = 0; m < ord; ++m) {
            powers[m] = acc;
            acc = grp.mul(acc, g);
        }
        for (int m = 0; m < ord; ++m) {
            if (tr1[powers[m]] != tr2[powers[m]]) {
                verdict.element_conjugate = false;
                verdict.element_witness = g;
                verdict.element_detail = {"trace", {powers[m]}, tr1[powers[m]], tr2[powers[m]]};
                break;
            }
        }
        if (!verdict.element_conjugate) break;
        if (carries_lambda && lam1[g] != lam2[g]) {
            verdict.element_conjugate = false;
            verdict.element_witness = g;
            verdict.element_detail = {"lambda", {g}, lam1[g], lam2[g]};
            break;
        }
        if (so_even) {
            bool ok = true;
            detail::scan_sorted_tuples(ord, half, opts.budget,
                                       [&](const std::vector<int>& idx) {
                                           std::vector<int> tuple(half);
                                           for (int i = 0; i < half; ++i) tuple[i] = powers[idx[i]];
                                           const Rational a = detail::pl_of_tuple(r1, tuple);
                                           const Rational b = detail::pl_of_tuple(r2, tuple);
                                           if (a != b) {
                                               ok = false;
                                               verdict.element_detail = {"pl", tuple, a, b};
                                               return true;
                                           }
                                           return false;
                                       });
            if (!ok) {
                verdict.element_conjugate = false;
                verdict.element_witness = g;
                break;
            }
        }
    }

    // --- global conjugacy: pseudocharacter equality ---
    for (int g = 0; g < grp.order(); ++g) {
        if (tr1[g] != tr2[g]) {
            verdict.globally_conjugate = false;
            verdict.global_detail = {"trace", {g}, tr1[g], tr2[g]};
            break;
        }
        if (carries_lambda && lam1[g] != lam2[g]) {
            verdict.globally_conjugate = false;
            verdict.global_detail = {"lambda", {g}, lam1[g], lam2[g]};
            break;
        }
    }
    if (verdict.globally_conjugate && so_even) {
        const long long per_tuple_cost = 1LL << half;
        const long long allowed =
            std::max<long long>(1, opts.budget / std::max<long long>(1, per_tuple_cost));
        const bool complete = detail::scan_sorted_tuples(
            grp.order(), half, allowed, [&](const std::vector<int>& tuple) {
                // A symmetric image annihilates the antisymmetrized linear
                // form, so both sides vanish; skip without evaluating.
                for (int g : tuple)
                    if (is_symmetric(r1.images[g]) && is_symmetric(r2.images[g])) return false;
                const Rational a = detail::pl_of_tuple(r1, tuple);
                const Rational b = detail::pl_of_tuple(r2, tuple);
                if (a != b) {
                    verdict.globally_conjugate = false;
                    verdict.global_detail = {"pl", tuple, a, b};
                    return true;
                }
                return false;
            });
        if (verdict.globally_conjugate && !complete) verdict.global_sampled = true;
    }

    return verdict;
}

/// Criterion for a semisimple special-orthogonal representation to admit an
/// element-conjugate, non-globally-conjugate partner: every antisymmetrized
/// image is singular, and some argument tuple has nonzero linearized
/// Pfaffian. Returns the first pl witness (sorted multisets, lexicographic)
/// or the first element blocking the determinant condition.
struct CounterexampleCriterion {
    bool holds = false;
    std::optional<std::vector<int>> witness_tuple;
    Rational witness_value;
    std::optional<int> blocking_element;
    bool search_exhausted = true;
};

inline CounterexampleCriterion so_counterexample_criterion(const Representation& rep,
                                                           const ConjugacyOptions& opts = {}) {
    if (rep.dim % 2 != 0) throw InvalidArgumentError("criterion needs even dimension");
    {
        const RepSimilitudeProfile prof = similitude_profile(rep);
        const bool so = prof.orthogonal_lambda &&
                        std::all_of(prof.orthogonal_lambda->begin(), prof.orthogonal_lambda->end(),
                                    [](const Rational& q) { return q == 1; }) &&
                        std::all_of(prof.dets.begin(), prof.dets.end(),
                                    [](const Rational& q) { return q == 1; });
        if (!so) throw InvalidArgumentError("criterion needs a special orthogonal representation");
    }
    CounterexampleCriterion out;
    for (int g = 0; g < rep.group.order(); ++g) {
        const Matrix& m = rep.images[g];
        if (det(m - transpose(m)) != 0) {
            out.holds = false;
            out.blocking_element = g;
            return out;
        }
    }
    const int half = rep.dim / 2;
    const long long per_tuple_cost = 1LL << half;
    const long long allowed =
        std::max<long long>(1, opts.budget / std::max<long long>(1, per_tuple_cost));
    bool found = false;
    const bool complete = detail::scan_sorted_tuples(
        rep.group.order(), half, allowed, [&](const std::vector<int>& tuple) {
            for (int g : tuple)
                if (is_symmetric(rep.images[g])) return false;
            const Rational v = detail::pl_of_tuple(rep, tuple);
            if (v != 0) {
                found = true;
                out.witness_tuple = tuple;
                out.witness_value = v;
                return true;
            }
            return false;
        });
    out.holds = found;
    out.search_exhausted = complete || found;
    return out;
}

/// The even-dimensional counterexample family on Z/4 x Z/4: generator
/// (1,0) maps to A + A + I + A + ... + A and (0,1) to I + A + A + A + ... + A
/// (2x2 blocks, A the rotation of order 4), landing in SO_2n for n >= 3.
inline Representation build_rho_2n(int n) {
    if (n < 3) throw InvalidArgumentError("the construction needs n >= 3 distinguished blocks");
    const FiniteGroup grp = direct_product(build_cyclic(4), build_cyclic(4));
    const Matrix a = Matrix::from_rows({{0, 1}, {-1, 0}});
    const Matrix id2 = Matrix::identity(2);
    std::vector<Matrix> blocks1{a, a, id2};
    std::vector<Matrix> blocks2{id2, a, a};
    for (int i = 4; i <= n; ++i) {
        blocks1.push_back(a);
        blocks2.push_back(a);
    }
    const Matrix g1 = direct_sum(std::span<const Matrix>(blocks1));
    const Matrix g2 = direct_sum(std::span<const Matrix>(blocks2));
    // element a*4+b = (1,0)^a (0,1)^b
    std::vector<GWord> words(grp.order());
    for (int g = 0; g < grp.order(); ++g) {
        GWord w;
        for (int i = 0; i < g / 4; ++i) w.letters.push_back({1, +1});
        for (int i = 0; i < g % 4; ++i) w.letters.push_back({2, +1});
        words[g] = w;
    }
    const std::vector<int> gen_elems{4, 1};
    const std::vector<Matrix> gen_mats{g1, g2};
    return from_generator_assignment(grp, gen_elems, gen_mats, words);
}

/// Runs the conjugacy comparison over fixture pairs. For the orthogonal and
/// symplectic similitude families element-conjugacy must imply global
/// conjugacy; for even SO the element-only pairs are what the suite exists
/// to find.
struct AcceptabilityReport {
    std::vector<ConjugacyVerdict> verdicts;
    std::vector<std::size_t> element_only_pairs;
};

inline AcceptabilityReport acceptability_suite(
    RepFamily family, std::span<const std::pair<Representation, Representation>> fixtures,
    const ConjugacyOptions& opts = {}) {
    AcceptabilityReport out;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        ConjugacyVerdict v = compare_representations(fixtures[i].first, fixtures[i].second,
                                                     family, opts);
        if (v.element_conjugate && !v.globally_conjugate) out.element_only_pairs.push_back(i);
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

} // namespace psc

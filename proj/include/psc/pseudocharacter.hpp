#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psc/pfaffian.hpp"
#include "psc/relations.hpp"
#include "psc/representation.hpp"

namespace psc {

/// The object under verification: a scalar function T on a finite group,
/// an optional similitude character l, and an optional linearized-Pfaffian
/// table P (even special-orthogonal case, arity dim/2).
struct PseudocharData {
    FiniteGroup group;
    int dim = 0;
    std::vector<Rational> T;
    std::optional<std::vector<Rational>> l;
    std::optional<std::map<std::vector<int>, Rational>> P;
};

inline Rational eval_relation(const RelationPolynomial& poly, const PseudocharData& d,
                              std::span<const int> tuple) {
    return eval_relation_on_group(poly, d.group, tuple, d.T, d.l ? &*d.l : nullptr, d.dim);
}

struct Violation {
    std::string axiom;
    std::vector<int> tuple;
    Rational value;
};

struct AxiomTally {
    std::string axiom;
    long long checked = 0;
    long long violations = 0;
    bool sampled = false;
    double population = 0;  // meaningful only when sampled
};

struct VerificationReport {
    std::vector<AxiomTally> tallies;
    std::vector<Violation> violations;  // capped; sorted by (axiom, tuple)
    long long violations_total = 0;
    std::vector<std::string> notes;
    std::uint64_t seed = 0;

    bool pass() const { return violations_total == 0; }

    std::string to_text() const {
        std::ostringstream out;
        out << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& t : tallies) {
            out << "axiom " << t.axiom << ": checked " << t.checked;
            if (t.sampled)
                out << " of " << static_cast<long long>(t.population) << " (sampled, seed "
                    << seed << ")";
            out << ", violations " << t.violations << "\n";
        }
        for (const auto& n : notes) out << "note: " << n << "\n";
        for (const auto& v : violations) {
            out << "violation " << v.axiom << " at (";
            for (std::size_t i = 0; i < v.tuple.size(); ++i)
                out << (i ? "," : "") << v.tuple[i];
            out << "): value " << to_string(v.value) << "\n";
        }
        if (violations_total > static_cast<long long>(violations.size()))
            out << "(" << violations_total - static_cast<long long>(violations.size())
                << " further violations not listed)\n";
        return out.str();
    }
};

struct VerifyOptions {
    long long budget = 2'000'000;  // scalar relation evaluations per axiom family
    std::uint64_t seed = 1;
    std::size_t max_violations = 25;
};

namespace detail {

class ReportBuilder {
  public:
    explicit ReportBuilder(const VerifyOptions& opts) : opts_(opts) {
        report_.seed = opts.seed;
    }

    AxiomTally& tally(const std::string& axiom) {
        for (auto& t : report_.tallies)
            if (t.axiom == axiom) return t;
        report_.tallies.push_back({axiom, 0, 0, false, 0});
        return report_.tallies.back();
    }

    void violation(const std::string& axiom, std::vector<int> tuple, Rational value) {
        tally(axiom).violations += 1;
        report_.violations_total += 1;
        if (report_.violations.size() < opts_.max_violations)
            report_.violations.push_back({axiom, std::move(tuple), std::move(value)});
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    VerificationReport finish() {
        std::sort(report_.violations.begin(), report_.violations.end(),
                  [](const Violation& a, const Violation& b) {
                      if (a.axiom != b.axiom) return a.axiom < b.axiom;
                      return a.tuple < b.tuple;
                  });
        return std::move(report_);
    }

  private:
    VerifyOptions opts_;
    VerificationReport report_;
};

// Enumerate all order^arity tuples when that stays within the per-family
// budget (scaled by the per-tuple evaluation cost), else a seeded uniform
// sample of matching size; coverage is recorded in the tally.
template <typename Eval>
void run_tuple_family(ReportBuilder& rb, const std::string& axiom, int order, int arity,
                      long long per_tuple_cost, const VerifyOptions& opts, Eval&& eval) {
    AxiomTally& tally = rb.tally(axiom);
    const long long allowed = std::max<long long>(1, opts.budget / std::max<long long>(1, per_tuple_cost));
    const double population = std::pow(static_cast<double>(order), arity);
    std::vector<int> tuple(arity, 0);
    if (population <= static_cast<double>(allowed)) {
        for (;;) {
            eval(tuple);
            ++tally.checked;
            int pos = arity - 1;
            while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
            if (pos < 0) break;
        }
    } else {
        tally.sampled = true;
        tally.population = population;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> pick(0, order - 1);
        for (long long i = 0; i < allowed; ++i) {
            for (auto& g : tuple) g = pick(rng);
            eval(tuple);
            ++tally.checked;
        }
    }
}

inline void validate_data(const PseudocharData& d) {
    if (d.dim < 1) throw InvalidArgumentError("pseudocharacter dimension must be positive");
    if (static_cast<int>(d.T.size()) != d.group.order())
        throw InvalidArgumentError("T table size does not match group order");
    if (d.l) {
        const auto& l = *d.l;
        if (static_cast<int>(l.size()) != d.group.order())
            throw MalformedSimilitudeError("l table size does not match group order");
        for (const auto& v : l)
            if (v == 0) throw MalformedSimilitudeError("l takes the value 0");
        if (l[d.group.identity()] != 1)
            throw MalformedSimilitudeError("l(identity) != 1");
        for (int g = 0; g < d.group.order(); ++g)
            for (int h = 0; h < d.group.order(); ++h)
                if (l[d.group.mul(g, h)] != l[g] * l[h])
                    throw MalformedSimilitudeError("l is not multiplicative at pair (" +
                                                   std::to_string(g) + ", " + std::to_string(h) +
                                                   ")");
    }
}

inline const RelationPolynomial& cached_gl_relation(int n) {
    static std::mutex mu;
    static std::map<int, RelationPolynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gl_relation(n)).first;
    return it->second;
}

inline const RelationPolynomial& cached_g_relation(int n, int j) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, RelationPolynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, j), g_relation(n, j)).first;
    return it->second;
}

inline void check_dimension_axiom(ReportBuilder& rb, const PseudocharData& d) {
    AxiomTally& t = rb.tally("T(1)=n");
    ++t.checked;
    if (d.T[d.group.identity()] != d.dim)
        rb.violation("T(1)=n", {d.group.identity()}, d.T[d.group.identity()] - d.dim);
}

inline void check_centrality(ReportBuilder& rb, const PseudocharData& d) {
    AxiomTally& t = rb.tally("centrality");
    for (int g = 0; g < d.group.order(); ++g)
        for (int h = 0; h < d.group.order(); ++h) {
            ++t.checked;
            const Rational diff = d.T[d.group.mul(g, h)] - d.T[d.group.mul(h, g)];
            if (diff != 0) rb.violation("centrality", {g, h}, diff);
        }
}

inline void check_inversion(ReportBuilder& rb, const PseudocharData& d,
                            const std::vector<Rational>& l) {
    AxiomTally& t = rb.tally("inversion");
    for (int g = 0; g < d.group.order(); ++g) {
        ++t.checked;
        const Rational diff = d.T[g] - l[g] * d.T[d.group.inv(g)];
        if (diff != 0) rb.violation("inversion", {g}, diff);
    }
}

inline void check_relation_family(ReportBuilder& rb, const std::string& axiom,
                                  const RelationPolynomial& poly, const PseudocharData& d,
                                  const VerifyOptions& opts) {
    run_tuple_family(rb, axiom, d.group.order(), poly.arity(),
                     static_cast<long long>(poly.term_count()), opts,
                     [&](const std::vector<int>& tuple) {
                         const Rational v = eval_relation(poly, d, tuple);
                         if (v != 0) rb.violation(axiom, tuple, v);
                     });
}

inline void check_det_axiom(ReportBuilder& rb, const PseudocharData& d) {
    AxiomTally& t = rb.tally("det(T)=1");
    for (int g = 0; g < d.group.order(); ++g) {
        ++t.checked;
        std::vector<Rational> powers;
        powers.reserve(d.dim);
        int acc = g;
        for (int i = 1; i <= d.dim; ++i) {
            powers.push_back(d.T[acc]);
            acc = d.group.mul(acc, g);
        }
        const Rational dd = determinant_from_power_traces(powers);
        if (dd != 1) rb.violation("det(T)=1", {g}, dd - 1);
    }
}

} // namespace detail

/// GL_n axioms: T(1)=n, centrality, and the arity-(n+1) trace relation.
inline VerificationReport verify_gl(const PseudocharData& d, const VerifyOptions& opts = {}) {
    detail::validate_data(d);
    detail::ReportBuilder rb(opts);
    detail::check_dimension_axiom(rb, d);
    detail::check_centrality(rb, d);
    detail::check_relation_family(rb, "relation gl", detail::cached_gl_relation(d.dim), d, opts);
    return rb.finish();
}

/// GO_n axioms: T(1)=n, centrality, the l-twisted inversion axiom, and the
/// relation families j = 0..(n+1)/2. Requires the similitude character.
inline VerificationReport verify_go(const PseudocharData& d, const VerifyOptions& opts = {}) {
    detail::validate_data(d);
    if (!d.l) throw MissingSimilitudeError("GO verification needs the similitude character l");
    detail::ReportBuilder rb(opts);
    detail::check_dimension_axiom(rb, d);
    detail::check_centrality(rb, d);
    detail::check_inversion(rb, d, *d.l);
    for (int j = 0; 2 * j <= d.dim + 1; ++j)
        detail::check_relation_family(rb, "relation j=" + std::to_string(j),
                                      detail::cached_g_relation(d.dim, j), d, opts);
    return rb.finish();
}

/// O_n mode: the GO axioms with l identically 1.
inline VerificationReport verify_o(const PseudocharData& d, const VerifyOptions& opts = {}) {
    if (d.l) {
        for (const auto& v : *d.l)
            if (v != 1)
                throw InvalidArgumentError("O verification needs l identically 1");
    }
    PseudocharData with_l = d;
    with_l.l = std::vector<Rational>(d.group.order(), Rational(1));
    return verify_go(with_l, opts);
}

/// GSp axioms: T(1)=n, centrality, and the l-twisted inversion axiom. No
/// generator is implemented for the symplectic relation family, so it is
/// not checked; the report carries a banner saying so.
inline VerificationReport verify_gsp(const PseudocharData& d, const VerifyOptions& opts = {}) {
    detail::validate_data(d);
    if (!d.l) throw MissingSimilitudeError("GSp verification needs the similitude character l");
    if (d.dim % 2 != 0) throw InvalidArgumentError("GSp verification needs even dimension");
    detail::ReportBuilder rb(opts);
    detail::check_dimension_axiom(rb, d);
    detail::check_centrality(rb, d);
    detail::check_inversion(rb, d, *d.l);
    rb.note("symplectic relation family not checked");
    return rb.finish();
}

/// Sp mode: the GSp axioms with l identically 1.
inline VerificationReport verify_sp(const PseudocharData& d, const VerifyOptions& opts = {}) {
    if (d.l) {
        for (const auto& v : *d.l)
            if (v != 1)
                throw InvalidArgumentError("Sp verification needs l identically 1");
    }
    PseudocharData with_l = d;
    with_l.l = std::vector<Rational>(d.group.order(), Rational(1));
    return verify_gsp(with_l, opts);
}

/// Odd special orthogonal: the O axioms plus det(T)(g) = 1 for every g,
/// with the determinant recovered from T(g), ..., T(g^dim) by Newton.
inline VerificationReport verify_so_odd(const PseudocharData& d, const VerifyOptions& opts = {}) {
    if (d.dim % 2 != 1) throw InvalidArgumentError("odd SO verification needs odd dimension");
    PseudocharData with_l = d;
    if (d.l) {
        for (const auto& v : *d.l)
            if (v != 1) throw InvalidArgumentError("SO verification needs l identically 1");
    }
    with_l.l = std::vector<Rational>(d.group.order(), Rational(1));
    detail::validate_data(with_l);
    detail::ReportBuilder rb(opts);
    detail::check_dimension_axiom(rb, with_l);
    detail::check_centrality(rb, with_l);
    detail::check_inversion(rb, with_l, *with_l.l);
    for (int j = 0; 2 * j <= d.dim + 1; ++j)
        detail::check_relation_family(rb, "relation j=" + std::to_string(j),
                                      detail::cached_g_relation(d.dim, j), with_l, opts);
    detail::check_det_axiom(rb, with_l);
    return rb.finish();
}

/// Even special orthogonal: the O axioms, the det axiom, and the P table.
/// P is checked for symmetry consistency always, and against the linearized
/// Pfaffian of an attached matrix model when one is supplied; no generator
/// is implemented for relations among products of P values.
inline VerificationReport verify_so_even(const PseudocharData& d,
                                         const Representation* model = nullptr,
                                         const VerifyOptions& opts = {}) {
    if (d.dim % 2 != 0) throw InvalidArgumentError("even SO verification needs even dimension");
    PseudocharData with_l = d;
    if (d.l) {
        for (const auto& v : *d.l)
            if (v != 1) throw InvalidArgumentError("SO verification needs l identically 1");
    }
    with_l.l = std::vector<Rational>(d.group.order(), Rational(1));
    detail::validate_data(with_l);
    const int half = d.dim / 2;
    detail::ReportBuilder rb(opts);
    detail::check_dimension_axiom(rb, with_l);
    detail::check_centrality(rb, with_l);
    detail::check_inversion(rb, with_l, *with_l.l);
    for (int j = 0; 2 * j <= d.dim + 1; ++j)
        detail::check_relation_family(rb, "relation j=" + std::to_string(j),
                                      detail::cached_g_relation(d.dim, j), with_l, opts);
    detail::check_det_axiom(rb, with_l);

    if (model != nullptr) {
        if (!(model->group == d.group))
            throw InvalidArgumentError("attached model is over a different group");
        if (model->dim != d.dim) throw DimensionError("attached model has a different dimension");
    }
    if (d.P) {
        for (const auto& [tuple, value] : *d.P) {
            if (static_cast<int>(tuple.size()) != half)
                throw InvalidArgumentError("P entry arity is not dim/2");
            for (int g : tuple)
                if (g < 0 || g >= d.group.order())
                    throw InvalidArgumentError("P entry references an element out of range");
            (void)value;
        }
        // Symmetric-function consistency: entries agreeing as multisets must
        // carry one value.
        {
            AxiomTally& t = rb.tally("P symmetry");
            std::map<std::vector<int>, Rational> canon;
            for (const auto& [tuple, value] : *d.P) {
                std::vector<int> key = tuple;
                std::sort(key.begin(), key.end());
                ++t.checked;
                auto [it, fresh] = canon.try_emplace(key, value);
                if (!fresh && it->second != value)
                    rb.violation("P symmetry", tuple, value - it->second);
            }
        }
        if (model != nullptr) {
            AxiomTally& t = rb.tally("P model consistency");
            for (const auto& [tuple, value] : *d.P) {
                ++t.checked;
                std::vector<Matrix> args;
                args.reserve(tuple.size());
                for (int g : tuple) args.push_back(model->images[g]);
                const Rational pl = linearized_pfaffian(args);
                if (pl != value) rb.violation("P model consistency", tuple, value - pl);
            }
        }
    } else {
        rb.note("P not supplied");
    }
    return rb.finish();
}

/// ker(T) = { eta | T(gamma eta) = T(gamma) for all gamma }.
inline std::vector<int> kernel_of_T(const PseudocharData& d) {
    detail::validate_data(d);
    std::vector<int> out;
    for (int eta = 0; eta < d.group.order(); ++eta) {
        bool in_kernel = true;
        for (int g = 0; g < d.group.order() && in_kernel; ++g)
            in_kernel = d.T[d.group.mul(g, eta)] == d.T[g];
        if (in_kernel) out.push_back(eta);
    }
    return out;
}

inline bool is_subgroup(const FiniteGroup& grp, std::span<const int> elems) {
    std::vector<char> member(grp.order(), 0);
    for (int g : elems) member[g] = 1;
    if (!member[grp.identity()]) return false;
    for (int g : elems) {
        if (!member[grp.inv(g)]) return false;
        for (int h : elems)
            if (!member[grp.mul(g, h)]) return false;
    }
    return true;
}

/// T = tr(rho), with the similitude character attached whenever the
/// classified family carries one.
inline PseudocharData trace_function(const Representation& rep) {
    PseudocharData out{rep.group, rep.dim, {}, std::nullopt, std::nullopt};
    out.T.reserve(rep.images.size());
    for (const auto& m : rep.images) out.T.push_back(trace(m));
    const RepClass cls = classify(rep);
    if (cls.family != RepFamily::GL) out.l = cls.lambda;
    return out;
}

/// The P table of a model: linearized Pfaffians on all sorted element
/// multisets of size dim/2 (pl is symmetric, so these determine all tuples).
inline std::map<std::vector<int>, Rational> pl_table(const Representation& rep) {
    if (rep.dim % 2 != 0) throw DimensionError("pl table needs even dimension");
    const int half = rep.dim / 2;
    std::map<std::vector<int>, Rational> out;
    std::vector<int> tuple(half, 0);
    for (;;) {
        std::vector<Matrix> args;
        args.reserve(half);
        for (int g : tuple) args.push_back(rep.images[g]);
        out.emplace(tuple, linearized_pfaffian(args));
        int pos = half - 1;
        while (pos >= 0 && tuple[pos] == rep.group.order() - 1) --pos;
        if (pos < 0) break;
        const int v = tuple[pos] + 1;
        for (int i = pos; i < half; ++i) tuple[i] = v;
    }
    return out;
}

} // namespace psc

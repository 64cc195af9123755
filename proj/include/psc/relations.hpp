#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "psc/words.hpp"

namespace psc {

// ---------------------------------------------------------------------------
// Permutation enumeration

/// Cycles of a permutation given as 0-based images, each cycle listed from
/// its least element, cycles ordered by least element.
inline std::vector<std::vector<int>> cycle_decomposition(std::span<const int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(m, 0);
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[cur] = 1;
            cycle.push_back(cur);
            cur = images[cur];
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

inline int permutation_sign(std::span<const int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<char> seen(m, 0);
    int cycles = 0;
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int cur = start; !seen[cur]; cur = images[cur]) seen[cur] = 1;
    }
    return (m - cycles) % 2 == 0 ? 1 : -1;
}

inline constexpr int kMaxRelationArity = 9;  // 9! terms is the desk-scale ceiling

/// Streams all m! permutations in lexicographic order as 0-based image
/// vectors with their signs. Refuses m > 9 rather than truncating.
template <typename Fn>
void for_each_permutation(int m, Fn&& fn) {
    if (m < 1) throw InvalidArgumentError("permutation degree must be positive");
    if (m > kMaxRelationArity)
        throw BudgetError("permutation degree " + std::to_string(m) +
                          " exceeds the enumeration budget (max " +
                          std::to_string(kMaxRelationArity) + ")");
    std::vector<int> images(m);
    std::iota(images.begin(), images.end(), 0);
    do {
        fn(static_cast<const std::vector<int>&>(images), permutation_sign(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

// ---------------------------------------------------------------------------
// The determinant D^j and its monomials

/// u_index or v_index; indices are 1-based slot numbers.
struct FormalSymbol {
    int index = 1;
    bool is_v = false;
    auto operator<=>(const FormalSymbol&) const = default;
};

/// Unordered formal pair (a, b) = (b, a).
struct SymbolPair {
    FormalSymbol a, b;
};

/// Expands the (n+1)x(n+1) determinant D^j over column permutations,
/// streaming fn(sign, pairs). Rows are labelled u_1..u_{j+s}, v_1..v_j and
/// columns u_{j+s+1}..u_{n+1}, v_{j+1}..v_{n+1}, with n+1 = 2j+s; every
/// monomial therefore uses each of u_1..u_{n+1}, v_1..v_{n+1} exactly once.
template <typename Fn>
void for_each_dj_monomial(int n, int j, Fn&& fn) {
    if (n < 1) throw InvalidArgumentError("relation dimension must be positive");
    if (j < 0 || 2 * j > n + 1)
        throw InvalidArgumentError("j must satisfy 0 <= j <= (n+1)/2");
    const int m = n + 1;
    const int s = m - 2 * j;
    auto row_label = [&](int r) {  // r in 1..m
        return r <= j + s ? FormalSymbol{r, false} : FormalSymbol{r - (j + s), true};
    };
    auto col_label = [&](int c) {  // c in 1..m
        return c <= j ? FormalSymbol{j + s + c, false} : FormalSymbol{c, true};
    };
    std::vector<SymbolPair> pairs(m);
    for_each_permutation(m, [&](const std::vector<int>& images, int sign) {
        for (int r = 1; r <= m; ++r)
            pairs[r - 1] = SymbolPair{row_label(r), col_label(images[r - 1] + 1)};
        fn(sign, static_cast<const std::vector<SymbolPair>&>(pairs));
    });
}

/// Rewrites one D^j monomial as the multiset of its cycle trace words.
///
/// The pairs induce a multigraph on slot indices in which every index has
/// one u-occurrence and one v-occurrence, hence degree two; the graph is a
/// disjoint union of cycles. Each cycle is walked from its least index with
/// the u-occurrence first, orienting every pair so that consecutive pairs
/// meet in complementary letters of the shared index. Index a contributes
/// the slot word M_a when its first coordinate in the walk is v_a, and
/// M_a^t when it is u_a. Canonicalization makes the start and direction
/// choices observationally irrelevant.
inline std::vector<TWord> monomial_cycle_words(std::span<const SymbolPair> pairs,
                                               std::span<const TWord> slot_words) {
    const int m = static_cast<int>(pairs.size());
    // occurrence[v][0] = pair holding u_v, occurrence[v][1] = pair holding v_v
    std::vector<std::array<int, 2>> occurrence(m + 1, {-1, -1});
    auto record = [&](const FormalSymbol& sym, int pair_idx) {
        if (sym.index < 1 || sym.index > m)
            throw std::logic_error("monomial symbol index out of range");
        int& slot = occurrence[sym.index][sym.is_v ? 1 : 0];
        if (slot != -1) throw std::logic_error("monomial vertex degree != 2");
        slot = pair_idx;
    };
    for (int e = 0; e < m; ++e) {
        record(pairs[e].a, e);
        record(pairs[e].b, e);
    }
    for (int v = 1; v <= m; ++v)
        if (occurrence[v][0] < 0 || occurrence[v][1] < 0)
            throw std::logic_error("monomial vertex degree != 2");

    std::vector<char> visited(m + 1, 0);
    std::vector<TWord> cycle_words;
    for (int start = 1; start <= m; ++start) {
        if (visited[start]) continue;
        TWord word;
        int vertex = start;
        bool first_is_u = true;  // walk begins at the u-occurrence of start
        for (;;) {
            visited[vertex] = 1;
            const TWord& slot = slot_words[vertex - 1];
            const TWord contribution = first_is_u ? word_transpose(slot) : slot;
            word.letters.insert(word.letters.end(), contribution.letters.begin(),
                                contribution.letters.end());
            // Orient the pair holding (vertex, first letter); its other side
            // is the second coordinate of the chain symbol.
            const SymbolPair& e = pairs[occurrence[vertex][first_is_u ? 0 : 1]];
            const bool a_is_first = e.a.index == vertex && e.a.is_v == !first_is_u;
            const FormalSymbol second = a_is_first ? e.b : e.a;
            if (second.index == start) break;
            vertex = second.index;
            // The next first coordinate is the complement of the second
            // coordinate's letter at the shared index.
            first_is_u = second.is_v;
        }
        cycle_words.push_back(canonical_t_symbol(word));
    }
    return cycle_words;
}

// ---------------------------------------------------------------------------
// Relation polynomials

enum class RelationRing {
    traces,       // indeterminates T_M, M a semigroup word
    similitudes,  // indeterminates U_M, l_M, M a group word
};

/// One collected monomial. In the traces ring only t_factors is populated;
/// in the similitudes ring u_factors, l_counts and const_power carry the
/// U-symbols, the l-multidegree, and the power of the substituted constant
/// U_1 = n.
struct RelationTerm {
    std::vector<TWord> t_factors;
    std::vector<GWord> u_factors;
    std::vector<int> l_counts;
    int const_power = 0;

    // Total order on canonical keys: higher factor count first (so leading
    // products print before their collapsed forms), then words, then the
    // l-multidegree and constant power.
    friend bool operator<(const RelationTerm& x, const RelationTerm& y) {
        if (x.t_factors.size() != y.t_factors.size())
            return x.t_factors.size() > y.t_factors.size();
        for (std::size_t i = 0; i < x.t_factors.size(); ++i) {
            if (word_less(x.t_factors[i], y.t_factors[i])) return true;
            if (word_less(y.t_factors[i], x.t_factors[i])) return false;
        }
        if (x.u_factors.size() != y.u_factors.size())
            return x.u_factors.size() > y.u_factors.size();
        for (std::size_t i = 0; i < x.u_factors.size(); ++i) {
            if (word_less(x.u_factors[i], y.u_factors[i])) return true;
            if (word_less(y.u_factors[i], x.u_factors[i])) return false;
        }
        if (x.l_counts != y.l_counts) return x.l_counts < y.l_counts;
        return x.const_power < y.const_power;
    }
    friend bool operator==(const RelationTerm& x, const RelationTerm& y) {
        return x.t_factors == y.t_factors && x.u_factors == y.u_factors &&
               x.l_counts == y.l_counts && x.const_power == y.const_power;
    }
};

/// Integer-coefficient formal sum of canonical terms; no zero coefficient
/// is ever stored.
class RelationPolynomial {
  public:
    RelationPolynomial(RelationRing ring, int arity) : ring_(ring), arity_(arity) {}

    RelationRing ring() const { return ring_; }
    int arity() const { return arity_; }
    const std::map<RelationTerm, long long>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add(RelationTerm term, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(term), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    RelationRing ring_;
    int arity_;
    std::map<RelationTerm, long long> terms_;
};

inline std::vector<TWord> default_slot_words(int arity) {
    std::vector<TWord> out;
    out.reserve(arity);
    for (int i = 1; i <= arity; ++i) out.push_back(single_letter_word(i));
    return out;
}

/// The GL_n trace relation: sum over S_{n+1} of sgn(sigma) times the product
/// of U-symbols of sigma's cycle words. Arity n+1, trivial l-part.
inline RelationPolynomial gl_relation(int n) {
    const int m = n + 1;
    RelationPolynomial poly(RelationRing::similitudes, m);
    for_each_permutation(m, [&](const std::vector<int>& images, int sign) {
        RelationTerm term;
        term.l_counts.assign(m, 0);
        for (const auto& cycle : cycle_decomposition(images)) {
            GWord w;
            for (int v : cycle) w.letters.push_back({v + 1, +1});
            term.u_factors.push_back(canonical_u_symbol(w));
        }
        std::sort(term.u_factors.begin(), term.u_factors.end(),
                  [](const GWord& a, const GWord& b) { return word_less(a, b); });
        poly.add(std::move(term), sign);
    });
    return poly;
}

/// The orthogonal trace relation F_{j,n+1} on the given slot words
/// (defaults to the single letters A_1..A_{n+1}).
inline RelationPolynomial f_relation(int n, int j, std::span<const TWord> slot_words) {
    const int m = n + 1;
    if (static_cast<int>(slot_words.size()) != m)
        throw InvalidArgumentError("f_relation needs n+1 slot words");
    RelationPolynomial poly(RelationRing::traces, m);
    for_each_dj_monomial(n, j, [&](int sign, const std::vector<SymbolPair>& pairs) {
        RelationTerm term;
        term.t_factors = monomial_cycle_words(pairs, slot_words);
        std::sort(term.t_factors.begin(), term.t_factors.end(),
                  [](const TWord& a, const TWord& b) { return word_less(a, b); });
        poly.add(std::move(term), sign);
    });
    return poly;
}

inline RelationPolynomial f_relation(int n, int j) {
    const auto slots = default_slot_words(n + 1);
    return f_relation(n, j, slots);
}

/// The GO form G_{j,n+1}: every T_M of F_{j,n+1} replaced by l_{M'} U_{M''}
/// through the GO translation, with U_1 substituted by the constant n at
/// build time.
inline RelationPolynomial g_relation(int n, int j, std::span<const TWord> slot_words) {
    const RelationPolynomial f = f_relation(n, j, slot_words);
    int alphabet = 0;
    for (const auto& w : slot_words)
        for (const auto& l : w.letters) alphabet = std::max(alphabet, l.var);
    RelationPolynomial poly(RelationRing::similitudes, f.arity());
    for (const auto& [fterm, coeff] : f.terms()) {
        RelationTerm term;
        term.l_counts.assign(alphabet, 0);
        for (const auto& tword : fterm.t_factors) {
            auto [lexp, gword] = go_split(tword, alphabet);
            for (int i = 0; i < alphabet; ++i) term.l_counts[i] += lexp.counts[i];
            GWord canon = canonical_u_symbol(gword);
            if (canon.empty())
                ++term.const_power;
            else
                term.u_factors.push_back(std::move(canon));
        }
        std::sort(term.u_factors.begin(), term.u_factors.end(),
                  [](const GWord& a, const GWord& b) { return word_less(a, b); });
        poly.add(std::move(term), coeff);
    }
    return poly;
}

inline RelationPolynomial g_relation(int n, int j) {
    const auto slots = default_slot_words(n + 1);
    return g_relation(n, j, slots);
}

// ---------------------------------------------------------------------------
// Evaluation

/// Evaluates a similitudes-ring polynomial on a group tuple: U_w becomes
/// T(w(gamma_1..gamma_k)), the l-multidegree becomes prod l(gamma_i)^c_i,
/// and the constant power becomes dim^p. Throws MissingSimilitudeError when
/// an l-factor is required but no l was supplied.
inline Rational eval_relation_on_group(const RelationPolynomial& poly, const FiniteGroup& grp,
                                       std::span<const int> tuple,
                                       std::span<const Rational> t_values,
                                       const std::vector<Rational>* l_values, int dim) {
    if (poly.ring() != RelationRing::similitudes)
        throw InvalidArgumentError("group evaluation needs a similitudes-ring polynomial");
    if (static_cast<int>(tuple.size()) < poly.arity())
        throw InvalidArgumentError("tuple shorter than relation arity");
    Rational acc(0);
    std::vector<const Rational*> factors;
    for (const auto& [term, coeff] : poly.terms()) {
        // The l-symbol requirement is checked before the zero short-circuit
        // so data without a similitude character is rejected even on
        // vanishing terms.
        bool needs_l = false;
        for (int c : term.l_counts) needs_l |= c != 0;
        if (needs_l && l_values == nullptr)
            throw MissingSimilitudeError("relation has l-symbols but no similitude character");
        factors.clear();
        bool vanishes = false;
        for (const auto& w : term.u_factors) {
            const Rational& t = t_values[eval_gword_in_group(w, tuple, grp)];
            if (t == 0) {
                vanishes = true;
                break;
            }
            factors.push_back(&t);
        }
        if (vanishes) continue;
        Rational value(static_cast<long>(coeff));
        for (int p = 0; p < term.const_power; ++p) value *= dim;
        for (std::size_t i = 0; i < term.l_counts.size(); ++i) {
            const int c = term.l_counts[i];
            if (c == 0) continue;
            value *= pow_rational((*l_values)[tuple[i]], static_cast<unsigned long>(c));
        }
        for (const Rational* t : factors) value *= *t;
        acc += value;
    }
    return acc;
}

/// Evaluates a traces-ring polynomial with T_w -> tr(w(matrices)).
inline Rational eval_trace_relation_on_matrices(const RelationPolynomial& poly,
                                                std::span<const Matrix> mats) {
    if (poly.ring() != RelationRing::traces)
        throw InvalidArgumentError("matrix trace evaluation needs a traces-ring polynomial");
    Rational acc(0);
    for (const auto& [term, coeff] : poly.terms()) {
        Rational value(static_cast<long>(coeff));
        for (const auto& w : term.t_factors) value *= trace(eval_tword(w, mats));
        acc += value;
    }
    return acc;
}

/// Evaluates a similitudes-ring polynomial with U_w -> tr(w(matrices)) and
/// l-symbols -> the supplied per-slot similitude factors.
inline Rational eval_similitude_relation_on_matrices(const RelationPolynomial& poly,
                                                     std::span<const Matrix> mats,
                                                     std::span<const Rational> lambdas) {
    if (poly.ring() != RelationRing::similitudes)
        throw InvalidArgumentError("similitude evaluation needs a similitudes-ring polynomial");
    if (mats.empty()) throw InvalidArgumentError("no matrices supplied");
    const int dim = mats[0].rows();
    Rational acc(0);
    for (const auto& [term, coeff] : poly.terms()) {
        Rational value(static_cast<long>(coeff));
        for (int p = 0; p < term.const_power; ++p) value *= dim;
        for (std::size_t i = 0; i < term.l_counts.size(); ++i) {
            const int c = term.l_counts[i];
            if (c == 0) continue;
            if (i >= lambdas.size())
                throw MissingSimilitudeError("missing similitude factor for slot " +
                                             std::to_string(i + 1));
            value *= pow_rational(lambdas[i], static_cast<unsigned long>(c));
        }
        for (const auto& w : term.u_factors) value *= trace(eval_gword_on_matrices(w, mats));
        acc += value;
    }
    return acc;
}

/// The scalar-matrix relation tr(M N N^t P) - tr(MP) tr(NN^t) / n, which
/// vanishes whenever every assigned matrix is an orthogonal similitude.
/// With lambda_normalized = false the raw unnormalized reading is returned.
inline Rational tnn_relation_check(const TWord& m, const TWord& n, const TWord& p,
                                   std::span<const Matrix> assign,
                                   bool lambda_normalized = true) {
    const Matrix mm = eval_tword(m, assign);
    const Matrix nn = eval_tword(n, assign);
    const Matrix pp = eval_tword(p, assign);
    const Matrix nnt = nn * transpose(nn);
    Rational rhs = trace(mm * pp) * trace(nnt);
    if (lambda_normalized) rhs /= mm.rows();
    return trace(mm * nnt * pp) - rhs;
}

// ---------------------------------------------------------------------------
// Stable text form

inline std::string format_term_factors(const RelationTerm& term, long long coeff_magnitude) {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty()) out += "·";  // middle dot
        out += piece;
    };
    if (coeff_magnitude != 1) append(std::to_string(coeff_magnitude));
    for (const auto& w : term.t_factors) append("T[" + format_word(w) + "]");
    for (const auto& w : term.u_factors) append("U[" + format_word(w) + "]");
    for (std::size_t i = 0; i < term.l_counts.size(); ++i) {
        if (term.l_counts[i] == 0) continue;
        std::string piece = "l[A" + std::to_string(i + 1) + "]";
        if (term.l_counts[i] > 1) piece += "^" + std::to_string(term.l_counts[i]);
        append(piece);
    }
    if (term.const_power > 0)
        append(term.const_power == 1 ? std::string("n")
                                     : "n^" + std::to_string(term.const_power));
    if (out.empty()) out = std::to_string(coeff_magnitude);
    return out;
}

/// Terms in key order: "U[A1]·U[A2] - U[A1 A2]".
inline std::string format_polynomial(const RelationPolynomial& poly) {
    if (poly.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [term, coeff] : poly.terms()) {
        const long long mag = coeff < 0 ? -coeff : coeff;
        if (first) {
            if (coeff < 0) out += "-";
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += format_term_factors(term, mag);
    }
    return out;
}

} // namespace psc

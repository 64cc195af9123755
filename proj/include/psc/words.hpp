#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "psc/group.hpp"
#include "psc/matrix.hpp"

namespace psc {

/// One letter of a semigroup word over {A_1, A_1^t, ..., A_m, A_m^t}.
/// Order: variable ascending, untransposed before transposed.
struct TLetter {
    int var = 1;  // 1-based
    bool transposed = false;
    auto operator<=>(const TLetter&) const = default;
};

/// Nonempty word in the free semigroup; indexes a trace symbol T_M.
struct TWord {
    std::vector<TLetter> letters;
    auto operator<=>(const TWord&) const = default;
};

/// One letter of a free-group word, exponent +1 or -1.
struct GLetter {
    int var = 1;
    int exp = 1;
    // +1 sorts before -1 for the same variable.
    std::strong_ordering operator<=>(const GLetter& o) const {
        if (auto c = var <=> o.var; c != 0) return c;
        return (exp < 0) <=> (o.exp < 0);
    }
    bool operator==(const GLetter&) const = default;
};

/// Reduced free-group word; the empty word is the identity (it appears as
/// the constant U_1 = n inside relation polynomials).
struct GWord {
    std::vector<GLetter> letters;
    auto operator<=>(const GWord&) const = default;
    bool empty() const { return letters.empty(); }
};

/// Transposed-letter multiplicities: the word M' in the GO translation
/// T_M -> l_{M'} U_{M''}. Since l is multiplicative only the counts matter.
struct LExponent {
    std::vector<int> counts;
    auto operator<=>(const LExponent&) const = default;
    bool trivial() const {
        return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
    }
};

// Length-first comparison; gives term keys a stable total order in which
// short words precede their extensions.
inline bool word_less(const TWord& a, const TWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}
inline bool word_less(const GWord& a, const GWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}

/// (M_1...M_r)^t = M_r^t...M_1^t: reverse the letters, toggle every flag.
inline TWord word_transpose(const TWord& w) {
    TWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->var, !it->transposed});
    return out;
}

namespace detail {
inline void min_rotation_into(const std::vector<TLetter>& v, std::vector<TLetter>& best) {
    const std::size_t n = v.size();
    std::vector<TLetter> rot(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) rot[i] = v[(r + i) % n];
        if (best.empty() || rot < best) best = rot;
    }
}
} // namespace detail

/// Canonical representative of T_M under T_{MN} = T_{NM} and T_M = T_{M^t}:
/// the least word among all rotations of M and all rotations of M^t.
inline TWord canonical_t_symbol(const TWord& w) {
    std::vector<TLetter> best;
    detail::min_rotation_into(w.letters, best);
    detail::min_rotation_into(word_transpose(w).letters, best);
    return TWord{std::move(best)};
}

/// Eager free reduction: no adjacent cancelling pair survives.
inline GWord reduce(const GWord& w) {
    GWord out;
    for (const auto& l : w.letters) {
        if (!out.letters.empty() && out.letters.back().var == l.var &&
            out.letters.back().exp == -l.exp) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

/// Canonical representative of U_M under U_{MN} = U_{NM} only: the least
/// rotation of the cyclic reduction. Inversion is not quotiented; the
/// relation U_M = l_M U_{M^-1} stays a generated relation.
inline GWord canonical_u_symbol(const GWord& w) {
    GWord r = reduce(w);
    while (r.letters.size() >= 2 && r.letters.front().var == r.letters.back().var &&
           r.letters.front().exp == -r.letters.back().exp) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
    }
    const std::size_t n = r.letters.size();
    if (n <= 1) return r;
    std::vector<GLetter> best, rot(n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) rot[i] = r.letters[(s + i) % n];
        if (best.empty() || rot < best) best = rot;
    }
    return GWord{std::move(best)};
}

/// The GO translation M -> (M', M''): counts[i] is the number of transposed
/// occurrences of A_{i+1}; the group word substitutes A_i^t -> A_i^-1 and
/// reduces. Respects concatenation on both components.
inline std::pair<LExponent, GWord> go_split(const TWord& w, int alphabet_size) {
    LExponent l;
    l.counts.assign(alphabet_size, 0);
    GWord g;
    g.letters.reserve(w.letters.size());
    for (const auto& letter : w.letters) {
        if (letter.var < 1 || letter.var > alphabet_size)
            throw InvalidArgumentError("word letter outside alphabet");
        if (letter.transposed) {
            ++l.counts[letter.var - 1];
            g.letters.push_back({letter.var, -1});
        } else {
            g.letters.push_back({letter.var, +1});
        }
    }
    return {std::move(l), reduce(g)};
}

/// Product of the assigned matrices and/or their transposes, in word order.
inline Matrix eval_tword(const TWord& w, std::span<const Matrix> assign) {
    if (w.letters.empty()) throw InvalidArgumentError("evaluating empty trace word");
    Matrix acc;
    bool first = true;
    for (const auto& l : w.letters) {
        if (l.var < 1 || l.var > static_cast<int>(assign.size()))
            throw InvalidArgumentError("word variable has no assigned matrix");
        Matrix factor = l.transposed ? transpose(assign[l.var - 1]) : assign[l.var - 1];
        acc = first ? std::move(factor) : acc * factor;
        first = false;
    }
    return acc;
}

/// Product in the group, inverses resolved through the inv table; the empty
/// word evaluates to the identity.
inline int eval_gword_in_group(const GWord& w, std::span<const int> assign,
                               const FiniteGroup& grp) {
    int acc = grp.identity();
    for (const auto& l : w.letters) {
        if (l.var < 1 || l.var > static_cast<int>(assign.size()))
            throw InvalidArgumentError("word variable has no assigned element");
        int g = assign[l.var - 1];
        if (l.exp < 0) g = grp.inv(g);
        acc = grp.mul(acc, g);
    }
    return acc;
}

/// Matrix product with exact inverses for negative exponents.
inline Matrix eval_gword_on_matrices(const GWord& w, std::span<const Matrix> assign) {
    if (assign.empty()) throw InvalidArgumentError("no matrices assigned");
    Matrix acc = Matrix::identity(assign[0].rows());
    for (const auto& l : w.letters) {
        if (l.var < 1 || l.var > static_cast<int>(assign.size()))
            throw InvalidArgumentError("word variable has no assigned matrix");
        acc = acc * (l.exp < 0 ? inverse(assign[l.var - 1]) : assign[l.var - 1]);
    }
    return acc;
}

// Word serialization: "A1 A2' A1-" with apostrophe = transpose, minus = inverse.
inline std::string format_word(const TWord& w) {
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += 'A' + std::to_string(l.var);
        if (l.transposed) out += '\'';
    }
    return out;
}

inline std::string format_word(const GWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += 'A' + std::to_string(l.var);
        if (l.exp < 0) out += '-';
    }
    return out;
}

inline TWord single_letter_word(int var, bool transposed = false) {
    return TWord{{TLetter{var, transposed}}};
}

} // namespace psc

#pragma once

#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "psc/group.hpp"
#include "psc/matrix.hpp"
#include "psc/words.hpp"

namespace psc {

/// Exact matrix representation of a finite group: one image per element,
/// with images[identity] = I and the homomorphism property verified on
/// construction (exhaustively up to order 64, sampled above).
struct Representation {
    FiniteGroup group;
    int dim = 0;
    std::vector<Matrix> images;

    const Matrix& image(int g) const { return images[g]; }
};

namespace detail {

inline void verify_homomorphism(const Representation& rep) {
    const int n = rep.group.order();
    if (static_cast<int>(rep.images.size()) != n)
        throw InvalidArgumentError("image table size mismatch");
    for (const auto& m : rep.images)
        if (!m.square() || m.rows() != rep.dim)
            throw DimensionError("representation image has wrong shape");
    if (!(rep.images[rep.group.identity()] == Matrix::identity(rep.dim)))
        throw NotAHomomorphismError("identity element maps to a non-identity matrix");
    auto check = [&](int g, int h) {
        if (!(rep.images[rep.group.mul(g, h)] == rep.images[g] * rep.images[h]))
            throw NotAHomomorphismError("images violate the homomorphism property at pair (" +
                                        std::to_string(g) + ", " + std::to_string(h) + ")");
    };
    if (n <= 64) {
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) check(g, h);
    } else {
        std::mt19937_64 rng(0x853c49e6748fea9bULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 1000; ++i) check(pick(rng), pick(rng));
    }
}

} // namespace detail

/// Closes the generators under multiplication; the closure becomes the
/// group, the matrices its images. Closure is detected through a canonical
/// hash of the exact entries, so generators of infinite order hit the
/// max_order ceiling deterministically.
inline Representation from_matrix_generators(std::span<const Matrix> gens, int max_order = 5000) {
    if (gens.empty()) throw InvalidArgumentError("no generators supplied");
    const int dim = gens[0].rows();
    for (const auto& g : gens) {
        if (!g.square() || g.rows() != dim) throw DimensionError("generator shape mismatch");
        if (det(g) == 0) throw InvalidArgumentError("singular generator");
    }
    std::vector<Matrix> elems;
    std::unordered_map<std::string, int> index;
    auto insert = [&](const Matrix& m) {
        auto [it, fresh] = index.try_emplace(m.entry_key(), static_cast<int>(elems.size()));
        if (fresh) {
            elems.push_back(m);
            if (static_cast<int>(elems.size()) > max_order)
                throw GroupTooLargeError("matrix closure exceeded max order " +
                                         std::to_string(max_order));
        }
        return it->second;
    };
    insert(Matrix::identity(dim));
    for (const auto& g : gens) insert(g);
    // worklist closure under right multiplication by generators
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Matrix prod = elems[head] * g;
            insert(prod);
        }
    }
    const int order = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            Matrix prod = elems[a] * elems[b];
            auto it = index.find(prod.entry_key());
            if (it == index.end())
                throw GroupTooLargeError("closure is not multiplication-closed at max order");
            table[a][b] = it->second;
        }
    Representation rep{FiniteGroup::from_cayley_table(table), dim, std::move(elems)};
    detail::verify_homomorphism(rep);
    return rep;
}

/// Shortest words for every element over the given generators (inverses
/// allowed), by breadth-first search over the Cayley graph. Throws when the
/// generators do not generate.
inline std::vector<GWord> words_by_bfs(const FiniteGroup& grp, std::span<const int> gen_elems) {
    std::vector<std::optional<GWord>> words(grp.order());
    words[grp.identity()] = GWord{};
    std::deque<int> queue{grp.identity()};
    while (!queue.empty()) {
        const int g = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gen_elems.size(); ++i) {
            for (int exp : {+1, -1}) {
                const int step = exp > 0 ? gen_elems[i] : grp.inv(gen_elems[i]);
                const int next = grp.mul(g, step);
                if (words[next]) continue;
                GWord w = *words[g];
                w.letters.push_back({static_cast<int>(i) + 1, exp});
                words[next] = reduce(w);
                queue.push_back(next);
            }
        }
    }
    std::vector<GWord> out(grp.order());
    for (int g = 0; g < grp.order(); ++g) {
        if (!words[g])
            throw InvalidArgumentError("generators do not generate the group (element " +
                                       std::to_string(g) + " unreachable)");
        out[g] = std::move(*words[g]);
    }
    return out;
}

/// Builds images from generator matrices and per-element words, then
/// verifies the homomorphism property exhaustively.
inline Representation from_generator_assignment(const FiniteGroup& grp,
                                                std::span<const int> gen_elems,
                                                std::span<const Matrix> gen_mats,
                                                std::span<const GWord> words) {
    if (gen_elems.size() != gen_mats.size())
        throw InvalidArgumentError("generator element/matrix count mismatch");
    if (static_cast<int>(words.size()) != grp.order())
        throw InvalidArgumentError("need one word per group element");
    if (gen_mats.empty()) throw InvalidArgumentError("no generators supplied");
    const int dim = gen_mats[0].rows();
    for (const auto& m : gen_mats)
        if (!m.square() || m.rows() != dim) throw DimensionError("generator shape mismatch");
    Representation rep{grp, dim, {}};
    rep.images.reserve(grp.order());
    for (int g = 0; g < grp.order(); ++g)
        rep.images.push_back(eval_gword_on_matrices(words[g], gen_mats));
    detail::verify_homomorphism(rep);
    return rep;
}

enum class RepFamily { GL, O, GO, SO, Sp, GSp };

inline const char* to_string(RepFamily f) {
    switch (f) {
        case RepFamily::GL: return "GL";
        case RepFamily::O: return "O";
        case RepFamily::GO: return "GO";
        case RepFamily::SO: return "SO";
        case RepFamily::Sp: return "Sp";
        case RepFamily::GSp: return "GSp";
    }
    return "?";
}

/// Structural classification of a representation with its per-element
/// similitude character.
struct RepClass {
    RepFamily family = RepFamily::GL;
    std::vector<Rational> lambda;  // per element; all 1 for GL/O/SO/Sp
};

/// Per-element similitude data for every image at once.
struct RepSimilitudeProfile {
    std::optional<std::vector<Rational>> orthogonal_lambda;
    std::optional<std::vector<Rational>> symplectic_lambda;
    std::vector<Rational> dets;
};

inline RepSimilitudeProfile similitude_profile(const Representation& rep) {
    RepSimilitudeProfile out;
    std::vector<Rational> orth, symp;
    bool all_orth = true, all_symp = rep.dim % 2 == 0;
    out.dets.reserve(rep.images.size());
    for (const auto& m : rep.images) {
        out.dets.push_back(det(m));
        SimilitudeClass c = classify_similitude(m);
        if (c.orthogonal_lambda)
            orth.push_back(*c.orthogonal_lambda);
        else
            all_orth = false;
        if (all_symp) {
            if (c.symplectic_lambda)
                symp.push_back(*c.symplectic_lambda);
            else
                all_symp = false;
        }
    }
    if (all_orth) out.orthogonal_lambda = std::move(orth);
    if (all_symp) out.symplectic_lambda = std::move(symp);
    return out;
}

/// Strongest family every image satisfies, in the priority order
/// Sp, SO, O, GSp, GO, GL; lambda is recorded for the chosen family.
inline RepClass classify(const Representation& rep) {
    const RepSimilitudeProfile prof = similitude_profile(rep);
    const auto all_one = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 1; });
    };
    std::vector<Rational> ones(rep.images.size(), Rational(1));
    if (prof.symplectic_lambda && all_one(*prof.symplectic_lambda))
        return {RepFamily::Sp, ones};
    if (prof.orthogonal_lambda && all_one(*prof.orthogonal_lambda)) {
        if (all_one(prof.dets)) return {RepFamily::SO, ones};
        return {RepFamily::O, ones};
    }
    if (prof.symplectic_lambda) return {RepFamily::GSp, *prof.symplectic_lambda};
    if (prof.orthogonal_lambda) return {RepFamily::GO, *prof.orthogonal_lambda};
    return {RepFamily::GL, ones};
}

/// g -> x rho(g) x^-1 over the same group.
inline Representation conjugate_rep(const Representation& rep, const Matrix& x) {
    if (!x.square() || x.rows() != rep.dim) throw DimensionError("conjugator shape mismatch");
    const Matrix xinv = inverse(x);
    Representation out{rep.group, rep.dim, {}};
    out.images.reserve(rep.images.size());
    for (const auto& m : rep.images) out.images.push_back(x * m * xinv);
    return out;
}

/// Blockwise direct sum of representations of one group.
inline Representation direct_sum_rep(std::span<const Representation> reps) {
    if (reps.empty()) throw InvalidArgumentError("direct sum of no representations");
    for (const auto& r : reps)
        if (!(r.group == reps[0].group))
            throw InvalidArgumentError("direct sum needs a common group");
    Representation out{reps[0].group, 0, {}};
    for (const auto& r : reps) out.dim += r.dim;
    out.images.reserve(reps[0].group.order());
    for (int g = 0; g < reps[0].group.order(); ++g) {
        std::vector<Matrix> blocks;
        blocks.reserve(reps.size());
        for (const auto& r : reps) blocks.push_back(r.images[g]);
        out.images.push_back(direct_sum(std::span<const Matrix>(blocks)));
    }
    return out;
}

} // namespace psc

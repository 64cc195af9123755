#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "psc/matrix.hpp"

namespace psc {

namespace detail {

// Pfaffian over the index subset encoded in `mask`, by first-index expansion
//   pf(S) = sum_t (-1)^{t-1} w[s_0][s_t] pf(S \ {s_0, s_t})
// memoized on subsets. Exact and O(2^n * n^2); dimensions here stay <= 16.
inline const Rational& pfaffian_subset(const Matrix& w, std::uint32_t mask,
                                       std::vector<Rational>& memo, std::vector<char>& done) {
    Rational& slot = memo[mask];
    if (done[mask]) return slot;
    done[mask] = 1;
    if (mask == 0) {
        slot = 1;
        return slot;
    }
    const int first = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    int t = 0;
    Rational acc(0);
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        ++t;
        const Rational& entry = w(first, j);
        if (entry != 0) {
            const std::uint32_t sub = mask & ~(1u << first) & ~(1u << j);
            Rational term = entry * pfaffian_subset(w, sub, memo, done);
            if (t % 2 == 0) term = -term;
            acc += term;
        }
    }
    slot = acc;
    return slot;
}

} // namespace detail

/// Pfaffian of an even-dimensional antisymmetric matrix; pf of the 0x0
/// matrix is 1 by convention (the empty product).
inline Rational pfaffian(const Matrix& w) {
    if (!w.square()) throw InvalidArgumentError("pfaffian: matrix is not square");
    if (w.rows() % 2 != 0) throw InvalidArgumentError("pfaffian: odd dimension");
    if (!is_antisymmetric(w)) throw InvalidArgumentError("pfaffian: matrix is not antisymmetric");
    const int n = w.rows();
    if (n > 30) throw InvalidArgumentError("pfaffian: dimension beyond subset-memo range");
    std::vector<Rational> memo(std::size_t(1) << n);
    std::vector<char> done(std::size_t(1) << n, 0);
    return detail::pfaffian_subset(w, (std::uint32_t(1) << n) - 1, memo, done);
}

/// pf(W - W^t) for any even-dimensional square W.
inline Rational pf_tilde(const Matrix& w) {
    if (!w.square()) throw InvalidArgumentError("pf_tilde: matrix is not square");
    if (w.rows() % 2 != 0) throw InvalidArgumentError("pf_tilde: odd dimension");
    return pfaffian(w - transpose(w));
}

/// Full polarization of pf_tilde: the coefficient of t_1...t_n in
/// pf(sum_i t_i (C_i - C_i^t)), for n matrices of size 2n x 2n, computed by
/// inclusion-exclusion over argument subsets. The antisymmetrized sum is
/// homogeneous of degree n, so the alternating subset sum isolates exactly
/// the multilinear coefficient.
inline Rational linearized_pfaffian(std::span<const Matrix> cs) {
    const int n = static_cast<int>(cs.size());
    if (n == 0) throw InvalidArgumentError("linearized pfaffian of no arguments");
    for (const auto& c : cs)
        if (!c.square() || c.rows() != 2 * n)
            throw InvalidArgumentError("linearized pfaffian needs n matrices of size 2n x 2n");
    // If any argument is symmetric its antisymmetrization vanishes and the
    // multilinear coefficient is zero.
    for (const auto& c : cs)
        if (is_symmetric(c)) return Rational(0);
    Rational acc(0);
    for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << n); ++subset) {
        Matrix sum(2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            if (subset & (std::uint32_t(1) << i)) sum += cs[i];
        Rational term = pf_tilde(sum);
        if ((n - std::popcount(subset)) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

inline Rational linearized_pfaffian(std::initializer_list<Matrix> cs) {
    std::vector<Matrix> v(cs);
    return linearized_pfaffian(std::span<const Matrix>(v));
}

/// Independent oracle for block-diagonal inputs with n blocks of size 2x2:
///   pl(C_1..C_n) = sum_{sigma in S_n} prod_i pf(C_sigma(i)^(i) - (C_sigma(i)^(i))^t).
inline Rational pl_block_oracle(std::span<const Matrix> cs) {
    const int n = static_cast<int>(cs.size());
    if (n == 0) throw InvalidArgumentError("block oracle of no arguments");
    for (const auto& c : cs) {
        if (!c.square() || c.rows() != 2 * n)
            throw InvalidArgumentError("block oracle needs n matrices of size 2n x 2n");
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j)
                if (i / 2 != j / 2 && c(i, j) != 0)
                    throw InvalidArgumentError("block oracle input is not 2x2 block-diagonal");
    }
    // pf of the antisymmetrized 2x2 block b is b(0,1) - b(1,0).
    std::vector<std::vector<Rational>> blockpf(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            blockpf[j][i] = cs[j](2 * i, 2 * i + 1) - cs[j](2 * i + 1, 2 * i);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational acc(0);
    do {
        Rational prod(1);
        for (int i = 0; i < n && prod != 0; ++i) prod *= blockpf[sigma[i]][i];
        acc += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc;
}

inline Rational pl_block_oracle(std::initializer_list<Matrix> cs) {
    std::vector<Matrix> v(cs);
    return pl_block_oracle(std::span<const Matrix>(v));
}

} // namespace psc

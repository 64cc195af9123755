#pragma once

#include <cstdint>
#include <numeric>
#include <random>

#include "psc/matrix.hpp"

namespace psc {

/// Deterministic generator for test vectors; no global randomness.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    int int_in(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng_);
    }

    bool coin() { return int_in(0, 1) == 1; }

    Rational small_rational(int max_num = 4, int max_den = 4) {
        int num = int_in(-max_num, max_num);
        int den = int_in(1, max_den);
        return make_rational(num, den);
    }

    Rational nonzero_small_rational(int max_num = 4, int max_den = 4) {
        for (;;) {
            Rational q = small_rational(max_num, max_den);
            if (q != 0) return q;
        }
    }

  private:
    std::mt19937_64 eng_;
};

inline Matrix random_matrix(int rows, int cols, SeededRng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.small_rational();
    return m;
}

inline Matrix random_antisymmetric(int n, SeededRng& rng) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = rng.small_rational();
            m(i, j) = v;
            m(j, i) = -v;
        }
    return m;
}

inline Matrix random_nonsingular_matrix(int n, SeededRng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, rng);
        if (det(m) != 0) return m;
    }
}

/// Exact orthogonal sample via the Cayley transform Q = (I-S)(I+S)^-1 for
/// random antisymmetric rational S. det(I+S) > 0 always, so the transform
/// never fails, and det(Q) = 1. With special=false the sample is pushed out
/// of SO with probability 1/2 by a reflection.
inline Matrix sample_orthogonal(int n, bool special, std::uint64_t seed) {
    if (n < 1) throw InvalidArgumentError("orthogonal sample dimension must be positive");
    SeededRng rng(seed);
    const Matrix id = Matrix::identity(n);
    Matrix q;
    bool built = false;
    for (int attempt = 0; attempt < 16 && !built; ++attempt) {
        Matrix s = random_antisymmetric(n, rng);
        try {
            q = (id - s) * inverse(id + s);
            built = true;
        } catch (const SingularMatrixError&) {
            // retry with a fresh S
        }
    }
    if (!built) throw SamplerFailureError("Cayley transform failed after bounded retries");
    if (!special && rng.coin()) {
        Matrix refl = id;
        refl(0, 0) = -1;
        q = refl * q;
    }
    return q;
}

/// Permutation matrix with random signs; an exact element of O_n of finite
/// order. With special=true the determinant is fixed to +1 by flipping one
/// sign if needed.
inline Matrix sample_signed_permutation(int n, bool special, std::uint64_t seed) {
    if (n < 1) throw InvalidArgumentError("signed permutation dimension must be positive");
    SeededRng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.int_in(0, i)]);
    std::vector<int> sign(n);
    for (int i = 0; i < n; ++i) sign[i] = rng.coin() ? 1 : -1;
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m(perm[j], j) = sign[j];
    if (special && det(m) == -1) {
        for (int i = 0; i < n; ++i) m(i, 0) = -m(i, 0);
    }
    return m;
}

} // namespace psc

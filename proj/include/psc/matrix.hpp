#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psc/errors.hpp"
#include "psc/rational.hpp"

namespace psc {

/// Dense matrix of exact rationals, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
        a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = static_cast<int>(rows.begin()->size());
        Matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw DimensionError("ragged row list");
            int j = 0;
            for (long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& c) {
        for (auto& v : a_) v *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    // String key of the exact entries; used for hashing in group closure.
    std::string entry_key() const {
        std::string key = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
        for (const auto& v : a_) {
            key += v.get_str();
            key += ',';
        }
        return key;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

inline Rational trace(const Matrix& m) {
    if (!m.square()) throw DimensionError("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline Matrix direct_sum(std::span<const Matrix> blocks) {
    if (blocks.empty()) throw InvalidArgumentError("direct sum of no blocks");
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix out(r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

inline Matrix direct_sum(std::initializer_list<Matrix> blocks) {
    std::vector<Matrix> v(blocks);
    return direct_sum(std::span<const Matrix>(v));
}

inline bool is_antisymmetric(const Matrix& m) {
    if (!m.square()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

inline bool is_symmetric(const Matrix& m) {
    if (!m.square()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Rational det(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    Matrix w = m;
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    Rational d = w(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

/// Exact inverse via Gauss-Jordan; throws SingularMatrixError.
inline Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse of non-square matrix");
    const int n = m.rows();
    Matrix w = m;
    Matrix out = Matrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrixError("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w(k, j), w(p, j));
                std::swap(out(k, j), out(p, j));
            }
        const Rational piv = w(k, k);
        for (int j = 0; j < n; ++j) {
            w(k, j) /= piv;
            out(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            const Rational f = w(i, k);
            for (int j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                out(i, j) -= f * out(k, j);
            }
        }
    }
    return out;
}

/// Elementary symmetric functions (e_1..e_n) from power sums (p_1..p_n)
/// via the Newton recurrence m*e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i.
/// With p_i = tr(B^i), e_n is det(B).
inline std::vector<Rational> charpoly_coeffs_from_traces(std::span<const Rational> p) {
    if (p.empty()) throw InvalidArgumentError("empty power-sum sequence");
    const int n = static_cast<int>(p.size());
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int i = 1; i <= m; ++i) {
            Rational term = e[m - i] * p[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e[m] = acc / m;
    }
    return std::vector<Rational>(e.begin() + 1, e.end());
}

inline Rational determinant_from_power_traces(std::span<const Rational> p) {
    return charpoly_coeffs_from_traces(p).back();
}

/// The standard symplectic form (0 I; -I 0), dimension 2n.
inline Matrix omega(int dim) {
    if (dim < 2 || dim % 2 != 0) throw DimensionError("omega needs even dimension");
    Matrix w(dim, dim);
    const int n = dim / 2;
    for (int i = 0; i < n; ++i) {
        w(i, n + i) = 1;
        w(n + i, i) = -1;
    }
    return w;
}

/// The symplectic involution A* = omega^-1 A^T omega.
inline Matrix symplectic_star(const Matrix& a) {
    if (!a.square() || a.rows() % 2 != 0)
        throw DimensionError("symplectic involution needs even dimension");
    const Matrix w = omega(a.rows());
    return inverse(w) * transpose(a) * w;
}

enum class MatrixKind {
    general_linear,
    orthogonal,
    general_orthogonal,
    special_orthogonal,
    symplectic,
    general_symplectic,
};

inline const char* to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::general_linear: return "GL";
        case MatrixKind::orthogonal: return "O";
        case MatrixKind::general_orthogonal: return "GO";
        case MatrixKind::special_orthogonal: return "SO";
        case MatrixKind::symplectic: return "Sp";
        case MatrixKind::general_symplectic: return "GSp";
    }
    return "?";
}

/// All similitude classes a single matrix belongs to. lambda values are
/// exact; both families can hold at once (omega itself is SO and Sp).
struct SimilitudeClass {
    std::optional<Rational> orthogonal_lambda;  // A A^t = lambda I
    std::optional<Rational> symplectic_lambda;  // A A* = lambda I
    bool special_orthogonal = false;

    std::vector<MatrixKind> kinds() const {
        std::vector<MatrixKind> out;
        if (orthogonal_lambda) {
            if (*orthogonal_lambda == 1) {
                out.push_back(MatrixKind::orthogonal);
                if (special_orthogonal) out.push_back(MatrixKind::special_orthogonal);
            } else {
                out.push_back(MatrixKind::general_orthogonal);
            }
        }
        if (symplectic_lambda) {
            out.push_back(*symplectic_lambda == 1 ? MatrixKind::symplectic
                                                  : MatrixKind::general_symplectic);
        }
        if (out.empty()) out.push_back(MatrixKind::general_linear);
        return out;
    }
};

// Returns lambda when m satisfies m * other = lambda I exactly.
inline std::optional<Rational> scalar_multiple_of_identity(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j) {
                if (m(i, j) != m(0, 0)) return std::nullopt;
            } else if (m(i, j) != 0) {
                return std::nullopt;
            }
        }
    return m(0, 0);
}

inline SimilitudeClass classify_similitude(const Matrix& a) {
    if (!a.square()) throw DimensionError("similitude classification needs a square matrix");
    const Rational d = det(a);
    if (d == 0) throw InvalidArgumentError("similitude classification needs a nonsingular matrix");
    SimilitudeClass out;
    if (auto lam = scalar_multiple_of_identity(a * transpose(a)); lam && *lam != 0) {
        out.orthogonal_lambda = *lam;
        out.special_orthogonal = (*lam == 1 && d == 1);
    }
    if (a.rows() % 2 == 0) {
        if (auto lam = scalar_multiple_of_identity(a * symplectic_star(a)); lam && *lam != 0)
            out.symplectic_lambda = *lam;
    }
    return out;
}

} // namespace psc

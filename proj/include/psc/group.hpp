#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psc/errors.hpp"

namespace psc {

/// A finite group stored as dense index tables. Elements are row indices
/// into the multiplication table; an optional label table supports display.
/// Immutable after construction.
class FiniteGroup {
  public:
    FiniteGroup() : FiniteGroup(1, {0}, {}) {}

    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw MalformedGroupError("empty multiplication table");
        std::vector<int> mult;
        mult.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n)
                throw MalformedGroupError("multiplication table is not square");
            for (int v : row) {
                if (v < 0 || v >= n)
                    throw MalformedGroupError("table entry " + std::to_string(v) + " out of range");
                mult.push_back(v);
            }
        }
        return FiniteGroup(n, std::move(mult), {});
    }

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const { return elem_orders_[a]; }

    const std::string& label(int a) const { return labels_[a]; }
    void set_labels(std::vector<std::string> labels) {
        if (static_cast<int>(labels.size()) != order_)
            throw InvalidArgumentError("label table size mismatch");
        labels_ = std::move(labels);
    }

    bool operator==(const FiniteGroup& other) const {
        return order_ == other.order_ && mult_ == other.mult_;
    }

  private:
    friend FiniteGroup build_cyclic(int m);
    friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
    friend class Representation;

    FiniteGroup(int order, std::vector<int> mult, std::vector<std::string> labels)
        : order_(order), mult_(std::move(mult)), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(order_);
            for (int g = 0; g < order_; ++g) labels_.push_back(std::to_string(g));
        }
        find_identity();
        build_inverses();
        check_associativity();
        build_element_orders();
    }

    void find_identity() {
        identity_ = -1;
        for (int e = 0; e < order_; ++e) {
            bool ok = true;
            for (int g = 0; g < order_ && ok; ++g)
                ok = mul(e, g) == g && mul(g, e) == g;
            if (ok) {
                identity_ = e;
                return;
            }
        }
        throw MalformedGroupError("no two-sided identity element");
    }

    void build_inverses() {
        inv_.assign(order_, -1);
        for (int g = 0; g < order_; ++g) {
            for (int h = 0; h < order_; ++h) {
                if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                    inv_[g] = h;
                    break;
                }
            }
            if (inv_[g] < 0)
                throw MalformedGroupError("element " + std::to_string(g) + " has no inverse");
        }
    }

    // Full O(n^3) scan up to order 64; 1000 seeded random triples above that.
    void check_associativity() {
        auto check = [&](int a, int b, int c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw MalformedGroupError("non-associative triple (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(c) + ")");
        };
        if (order_ <= 64) {
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    for (int c = 0; c < order_; ++c) check(a, b, c);
        } else {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
            std::uniform_int_distribution<int> pick(0, order_ - 1);
            for (int i = 0; i < 1000; ++i) check(pick(rng), pick(rng), pick(rng));
        }
    }

    void build_element_orders() {
        elem_orders_.assign(order_, 0);
        for (int g = 0; g < order_; ++g) {
            int acc = g;
            int m = 1;
            while (acc != identity_) {
                acc = mul(acc, g);
                ++m;
                if (m > order_)
                    throw MalformedGroupError("element " + std::to_string(g) +
                                              " generates no identity power");
            }
            elem_orders_[g] = m;
        }
    }

    int order_;
    int identity_ = 0;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<int> elem_orders_;
    std::vector<std::string> labels_;
};

/// Z/mZ under addition; identity is 0.
inline FiniteGroup build_cyclic(int m) {
    if (m < 1) throw InvalidArgumentError("cyclic group order must be positive");
    std::vector<int> mult(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mult[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    return FiniteGroup(m, std::move(mult), {});
}

/// Componentwise product; element (a, b) is encoded as a*|h| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order() * h.order();
    std::vector<int> mult(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        const int a1 = a / h.order(), a2 = a % h.order();
        for (int b = 0; b < n; ++b) {
            const int b1 = b / h.order(), b2 = b % h.order();
            mult[static_cast<std::size_t>(a) * n + b] =
                g.mul(a1, b1) * h.order() + h.mul(a2, b2);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int a = 0; a < n; ++a)
        labels.push_back("(" + g.label(a / h.order()) + "," + h.label(a % h.order()) + ")");
    return FiniteGroup(n, std::move(mult), std::move(labels));
}

/// g^m with inverses for negative m; g^0 is the identity.
inline int power(int g, long m, const FiniteGroup& grp) {
    int base = m < 0 ? grp.inv(g) : g;
    unsigned long e = m < 0 ? 0UL - static_cast<unsigned long>(m) : static_cast<unsigned long>(m);
    e %= static_cast<unsigned long>(grp.elem_order(base));
    int acc = grp.identity();
    for (unsigned long i = 0; i < e; ++i) acc = grp.mul(acc, base);
    return acc;
}

} // namespace psc

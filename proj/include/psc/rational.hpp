#pragma once

#include <gmpxx.h>

#include <string>

#include "psc/errors.hpp"

namespace psc {

using Integer = mpz_class;

// Exact rational scalar. GMP keeps values reduced with a positive
// denominator, which is the invariant every consumer here relies on.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidArgumentError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with an optional sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational '" + text + "' has zero denominator");
        Rational q(num);
        q /= Rational(den);
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) {
    return q.get_str();  // "p" or "p/q", sign on the numerator
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational out(1);
    Rational acc = base;
    while (e != 0) {
        if (e & 1) out *= acc;
        e >>= 1;
        if (e != 0) acc *= acc;
    }
    return out;
}

} // namespace psc

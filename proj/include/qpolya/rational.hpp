#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "qpolya/error.hpp"

namespace qpolya {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on (num, den) construction; this does.
inline Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw DomainError("division_by_zero", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k); // k > n yields 0
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact coefficient division, overloaded per scalar type so generic
// polynomial code can divide where it is legal.
inline Int divide_coeff(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw DomainError("division_by_zero", "integer division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0)
        throw DomainError("inexact_division", "integer division is not exact");
    return q;
}

inline Rational divide_coeff(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw DomainError("division_by_zero", "rational division by zero");
    return a / b;
}

// "num/den" with a mandatory slash; used by the dump format and JSON output.
inline std::string to_fraction_string(const Rational& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Strict inverse of to_fraction_string (also accepts a bare integer).
inline Rational parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text))
            throw DomainError("format_error", "bad rational literal: " + text);
        return Rational(Int(text, 10));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw DomainError("format_error", "bad rational literal: " + text);
    return make_rational(Int(num, 10), Int(den, 10));
}

} // namespace qpolya

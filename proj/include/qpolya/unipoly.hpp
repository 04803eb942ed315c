#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qpolya/rational.hpp"

namespace qpolya {

class Cyclotomic;

namespace detail {

inline std::string coeff_repr(const Int& v) { return v.get_str(); }
inline std::string coeff_repr(const Rational& v) { return v.get_str(); }
inline bool coeff_is_negative(const Int& v) { return sgn(v) < 0; }
inline bool coeff_is_negative(const Rational& v) { return sgn(v) < 0; }
inline std::string coeff_repr_abs(const Int& v) { return Int(abs(v)).get_str(); }
inline std::string coeff_repr_abs(const Rational& v) { return Rational(abs(v)).get_str(); }
inline bool coeff_is_one_abs(const Int& v) { return abs(v) == 1; }
inline bool coeff_is_one_abs(const Rational& v) { return abs(v) == 1; }
inline bool coeff_needs_parens(const Int&) { return false; }
inline bool coeff_needs_parens(const Rational&) { return false; }

// defined in cyclotomic.hpp; declared here so the template sees them
std::string coeff_repr(const Cyclotomic& c);
bool coeff_is_negative(const Cyclotomic& c);
std::string coeff_repr_abs(const Cyclotomic& c);
bool coeff_is_one_abs(const Cyclotomic& c);
bool coeff_needs_parens(const Cyclotomic& c);

} // namespace detail

/// Dense univariate polynomial over an exact scalar type T.
///
/// Representation: coefficient vector indexed by exponent with trailing zeros
/// trimmed, so the zero polynomial stores nothing and every stored leading
/// coefficient is nonzero. degree() returns neg_inf_degree for the zero
/// polynomial; the sentinel is far enough from LONG_MIN that sums of two
/// degrees never wrap.
template <class T>
class UniPoly {
public:
    static constexpr long neg_inf_degree = std::numeric_limits<long>::min() / 4;

    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }

    static UniPoly constant(T v) {
        UniPoly p;
        if (!is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }

    static UniPoly monomial(T v, std::size_t exponent) {
        UniPoly p;
        if (!is_zero(v)) {
            p.c_.assign(exponent + 1, T{});
            p.c_[exponent] = std::move(v);
        }
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    long degree() const {
        return c_.empty() ? neg_inf_degree : static_cast<long>(c_.size()) - 1;
    }

    // Saturating degree addition matching deg(f*g) = deg f + deg g over a domain.
    static long add_degrees(long a, long b) {
        if (a == neg_inf_degree || b == neg_inf_degree) return neg_inf_degree;
        return a + b;
    }

    const std::vector<T>& coeffs() const { return c_; }

    T coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : T{};
    }

    const T& leading() const { return c_.back(); }

    void set_coeff(std::size_t i, T v) {
        if (i >= c_.size()) {
            if (is_zero(v)) return;
            c_.resize(i + 1, T{});
        }
        c_[i] = std::move(v);
        trim();
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c_ = mul_dispatch(a.c_, b.c_);
        r.trim();
        return r;
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const T& s) const {
        if (is_zero(s)) return UniPoly();
        UniPoly r(*this);
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    UniPoly shifted(std::size_t e) const {
        if (c_.empty() || e == 0) return e == 0 ? *this : UniPoly();
        UniPoly r;
        r.c_.assign(c_.size() + e, T{});
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + e] = c_[i];
        return r;
    }

    T eval(const T& x) const {
        if (c_.empty()) return T{};
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    // Euclidean division; requires divide_coeff to invert b's leading coefficient
    // (field scalars, or ring scalars with a monic/unit-leading divisor).
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        if (b.is_zero_poly())
            throw DomainError("division_by_zero", "polynomial division by zero");
        q = UniPoly();
        r = a;
        long db = b.degree();
        while (!r.is_zero_poly() && r.degree() >= db) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - db);
            T t = divide_coeff(r.leading(), b.leading());
            if (q.c_.size() < shift + 1) q.c_.resize(shift + 1, T{});
            q.c_[shift] += t;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[i + shift] -= t * b.c_[i];
            r.trim();
        }
        q.trim();
    }

    UniPoly divexact(const UniPoly& b) const {
        UniPoly q, r;
        divrem(*this, b, q, r);
        if (!r.is_zero_poly())
            throw DomainError("inexact_division", "polynomial division is not exact");
        return q;
    }

    bool divisible_by(const UniPoly& b) const {
        UniPoly q, r;
        divrem(*this, b, q, r);
        return r.is_zero_poly();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t e = 0; e < c_.size(); ++e) {
            if (is_zero(c_[e])) continue;
            const T& c = c_[e];
            bool neg = detail::coeff_is_negative(c);
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string cs = detail::coeff_needs_parens(c)
                                 ? "(" + detail::coeff_repr(c) + ")"
                                 : detail::coeff_repr_abs(c);
            bool unit = !detail::coeff_needs_parens(c) && detail::coeff_is_one_abs(c);
            if (e == 0) {
                out += cs;
            } else {
                if (!unit) out += cs + "*";
                out += var;
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    // Multiplication strategy: schoolbook below the size threshold, Karatsuba
    // above it. The threshold is in coefficients of the smaller operand.
    static constexpr std::size_t karatsuba_threshold = 32;

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static std::vector<T> mul_school(const std::vector<T>& a, const std::vector<T>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<T> r(a.size() + b.size() - 1, T{});
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    static std::vector<T> mul_dispatch(const std::vector<T>& a, const std::vector<T>& b) {
        if (std::min(a.size(), b.size()) <= karatsuba_threshold)
            return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<T> mul_karatsuba(const std::vector<T>& a, const std::vector<T>& b) {
        std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
        auto lo = [&](const std::vector<T>& v) {
            return std::vector<T>(v.begin(), v.begin() + std::min(h, v.size()));
        };
        auto hi = [&](const std::vector<T>& v) {
            return v.size() > h ? std::vector<T>(v.begin() + h, v.end()) : std::vector<T>{};
        };
        auto vadd = [](std::vector<T> x, const std::vector<T>& y) {
            if (x.size() < y.size()) x.resize(y.size(), T{});
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        std::vector<T> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
        std::vector<T> z0 = mul_dispatch(a0, b0);
        std::vector<T> z2 = mul_dispatch(a1, b1);
        std::vector<T> z1 = mul_dispatch(vadd(a0, a1), vadd(b0, b1));
        // z1 -= z0 + z2
        if (z1.size() < std::max(z0.size(), z2.size()))
            z1.resize(std::max(z0.size(), z2.size()), T{});
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<T> r(a.size() + b.size() - 1, T{});
        for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); ++i)
            if (i + h < r.size()) r[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i)
            if (i + 2 * h < r.size()) r[i + 2 * h] += z2[i];
        return r;
    }
};

template <class T>
inline bool is_zero(const UniPoly<T>& p) { return p.is_zero_poly(); }

// Exact division as the coefficient-division hook, so fraction-free matrix
// algorithms work over polynomial entries.
template <class T>
inline UniPoly<T> divide_coeff(const UniPoly<T>& a, const UniPoly<T>& b) {
    return a.divexact(b);
}

inline UniPoly<Rational> to_rational_poly(const UniPoly<Int>& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return UniPoly<Rational>(std::move(c));
}

} // namespace qpolya

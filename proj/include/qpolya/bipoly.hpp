#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpolya/unipoly.hpp"

namespace qpolya {

/// Sparse bivariate polynomial over T. Terms are kept in a map ordered
/// lexicographically by (first exponent, second exponent); zero coefficients
/// are never stored. Variable names are bound only at printing time, so the
/// same type serves P(x,z) annihilators and the symbolic (y,q) products.
template <class T>
class BiPoly {
public:
    using Key = std::pair<long, long>;

    BiPoly() = default;

    static BiPoly constant(T v) {
        BiPoly p;
        p.add_term(0, 0, std::move(v));
        return p;
    }

    static BiPoly monomial(T v, long i, long j) {
        BiPoly p;
        p.add_term(i, j, std::move(v));
        return p;
    }

    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, T>& terms() const { return terms_; }

    void add_term(long i, long j, T v) {
        if (is_zero(v)) return;
        auto key = Key{i, j};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, std::move(v));
        } else {
            it->second += v;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    T coeff(long i, long j) const {
        auto it = terms_.find(Key{i, j});
        return it == terms_.end() ? T{} : it->second;
    }

    long deg_first() const {
        long d = UniPoly<T>::neg_inf_degree;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first);
        return d;
    }

    long deg_second() const {
        long d = UniPoly<T>::neg_inf_degree;
        for (const auto& [k, v] : terms_) d = std::max(d, k.second);
        return d;
    }

    long total_degree() const {
        long d = UniPoly<T>::neg_inf_degree;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    long min_first_exp() const {
        long m = -1;
        for (const auto& [k, v] : terms_) m = (m < 0 || k.first < m) ? k.first : m;
        return m;
    }

    long min_second_exp() const {
        long m = -1;
        for (const auto& [k, v] : terms_) m = (m < 0 || k.second < m) ? k.second : m;
        return m;
    }

    BiPoly shifted_down_first(long e) const {
        BiPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.first - e, k.second}, v);
        return r;
    }

    BiPoly shifted_down_second(long e) const {
        BiPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.first, k.second - e}, v);
        return r;
    }

    // Coefficient of second^j as a polynomial in the first variable.
    UniPoly<T> coeff_of_second(long j) const {
        UniPoly<T> out;
        for (const auto& [k, v] : terms_)
            if (k.second == j) out.set_coeff(static_cast<std::size_t>(k.first), v);
        return out;
    }

    // Coefficient of first^i as a polynomial in the second variable.
    UniPoly<T> coeff_of_first(long i) const {
        UniPoly<T> out;
        for (const auto& [k, v] : terms_)
            if (k.first == i) out.set_coeff(static_cast<std::size_t>(k.second), v);
        return out;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, T{} - v);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const T& s) const {
        BiPoly r;
        for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * s);
        return r;
    }

    T eval(const T& x, const T& y) const {
        std::map<long, T> xp, yp;
        // binary powering, e >= 1
        auto power = [](std::map<long, T>& cache, const T& base, long e) -> const T& {
            auto it = cache.find(e);
            if (it != cache.end()) return it->second;
            T result;
            T b = base;
            long n = e;
            bool set = false;
            while (n > 0) {
                if (n & 1) {
                    if (set) result *= b; else { result = b; set = true; }
                }
                n >>= 1;
                if (n > 0) b *= b;
            }
            return cache.emplace(e, std::move(result)).first->second;
        };
        T sum{};
        for (const auto& [k, v] : terms_) {
            T t = v;
            if (k.first > 0) t *= power(xp, x, k.first);
            if (k.second > 0) t *= power(yp, y, k.second);
            sum += t;
        }
        return sum;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string to_string(const std::string& v1 = "x", const std::string& v2 = "z") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
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
            std::string vars;
            if (k.first > 0) {
                vars += v1;
                if (k.first > 1) vars += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                if (!vars.empty()) vars += "*";
                vars += v2;
                if (k.second > 1) vars += "^" + std::to_string(k.second);
            }
            if (vars.empty()) {
                out += cs;
            } else if (unit) {
                out += vars;
            } else {
                out += cs + "*" + vars;
            }
        }
        return out;
    }

private:
    std::map<Key, T> terms_;
};

template <class T>
inline bool is_zero(const BiPoly<T>& p) { return p.is_zero_poly(); }

} // namespace qpolya

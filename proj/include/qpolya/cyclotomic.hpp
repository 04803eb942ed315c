#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpolya/unipoly.hpp"

namespace qpolya {

/// s-th cyclotomic polynomial over the integers, computed by the recursive
/// quotient (x^s - 1) / prod_{d | s, d < s} Phi_d and cached process-wide.
/// Thread-safe; safe to call from parallel kernels.
const UniPoly<Int>& cyclotomic_poly(unsigned long s);

/// Degree of Phi_s.
unsigned long euler_phi(unsigned long s);

/// Element of the cyclotomic field Q(zeta_s) in the canonical representation:
/// the residue of a polynomial in zeta_s modulo Phi_s, so the stored degree is
/// always below phi(s) and equality of residues is equality of field elements.
///
/// Elements of different orders interoperate: binary operations embed both
/// sides into Q(zeta_lcm) first, via the index dilation zeta_s = zeta_{ms}^m.
/// Rationals are the order-1 case (constant residue).
class Cyclotomic {
public:
    Cyclotomic() : order_(1) {}
    explicit Cyclotomic(const Rational& value, unsigned long order = 1);
    explicit Cyclotomic(long value, unsigned long order = 1)
        : Cyclotomic(Rational(value), order) {}

    static Cyclotomic zeta(unsigned long order);
    static Cyclotomic from_residue(UniPoly<Rational> residue, unsigned long order);
    // Residue coordinates as written by the dump format: exactly phi(order)
    // entries, lowest power first.
    static Cyclotomic from_coordinates(const std::vector<Rational>& coords,
                                       unsigned long order);

    unsigned long order() const { return order_; }
    const UniPoly<Rational>& residue() const { return residue_; }
    std::vector<Rational> coordinates() const; // padded to phi(order)

    bool is_zero_value() const { return residue_.is_zero_poly(); }
    bool is_one() const;
    bool is_rational() const { return residue_.degree() <= 0; }
    Rational to_rational() const; // requires is_rational()

    // Same element viewed inside Q(zeta_new_order); order() must divide it.
    Cyclotomic embedded(unsigned long new_order) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    // Field inverse via the extended Euclidean algorithm against Phi_s.
    // Throws DomainError("division_by_zero") on zero.
    Cyclotomic inverse() const;

    // Complex conjugate: the automorphism zeta_s -> zeta_s^(s-1).
    Cyclotomic conj() const;

    Cyclotomic pow(long e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string(const std::string& var = "z") const;

private:
    unsigned long order_;
    UniPoly<Rational> residue_;

    static UniPoly<Rational> reduce(UniPoly<Rational> raw, unsigned long order);
};

inline bool is_zero(const Cyclotomic& v) { return v.is_zero_value(); }

inline Cyclotomic divide_coeff(const Cyclotomic& a, const Cyclotomic& b) {
    return a / b;
}

/// True when q^L = 1 for L = lcm(2, order), the torsion exponent of the
/// field's unit group. Throws DomainError("zero_input") on q = 0.
bool is_root_of_unity(const Cyclotomic& q);

/// Minimal m >= 1 with q^m = 1, or nullopt when q is not a root of unity.
std::optional<unsigned long> root_of_unity_order(const Cyclotomic& q);

template <class T>
Cyclotomic eval_at(const UniPoly<T>& p, const Cyclotomic& x) {
    Cyclotomic acc(Rational(0), x.order());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        if constexpr (std::is_same_v<T, Cyclotomic>)
            acc += c[i];
        else
            acc += Cyclotomic(Rational(c[i]));
    }
    return acc;
}

namespace detail {

inline bool coeff_is_negative(const Cyclotomic& c) {
    return c.is_rational() && sgn(c.to_rational()) < 0;
}
inline bool coeff_needs_parens(const Cyclotomic& c) { return !c.is_rational(); }
inline std::string coeff_repr(const Cyclotomic& c) { return c.to_string(); }
inline std::string coeff_repr_abs(const Cyclotomic& c) {
    if (c.is_rational()) return Rational(abs(c.to_rational())).get_str();
    return c.to_string();
}
inline bool coeff_is_one_abs(const Cyclotomic& c) {
    return c.is_rational() && abs(c.to_rational()) == 1;
}

} // namespace detail

} // namespace qpolya

#include "qpolya/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qpolya {

namespace {

struct PhiEntry {
    UniPoly<Int> z;
    UniPoly<Rational> q;
};

std::recursive_mutex phi_mutex;
std::map<unsigned long, PhiEntry>& phi_cache() {
    static std::map<unsigned long, PhiEntry> cache;
    return cache;
}

const PhiEntry& phi_entry(unsigned long s) {
    if (s == 0) throw DomainError("out_of_range", "cyclotomic order must be positive");
    std::lock_guard<std::recursive_mutex> lock(phi_mutex);
    auto& cache = phi_cache();
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    // x^s - 1 divided by every proper-divisor cyclotomic; all factors monic,
    // so the division stays over the integers.
    UniPoly<Int> num = UniPoly<Int>::monomial(Int(1), s);
    num -= UniPoly<Int>::constant(Int(1));
    for (unsigned long d = 1; d < s; ++d) {
        if (s % d != 0) continue;
        num = num.divexact(phi_entry(d).z);
    }
    PhiEntry e{num, to_rational_poly(num)};
    return cache.emplace(s, std::move(e)).first->second;
}

} // namespace

const UniPoly<Int>& cyclotomic_poly(unsigned long s) { return phi_entry(s).z; }

unsigned long euler_phi(unsigned long s) {
    return static_cast<unsigned long>(cyclotomic_poly(s).degree());
}

UniPoly<Rational> Cyclotomic::reduce(UniPoly<Rational> raw, unsigned long order) {
    const PhiEntry& e = phi_entry(order);
    if (raw.degree() < e.z.degree()) return raw;
    UniPoly<Rational> q, r;
    UniPoly<Rational>::divrem(raw, e.q, q, r);
    return r;
}

Cyclotomic::Cyclotomic(const Rational& value, unsigned long order) : order_(order) {
    residue_ = reduce(UniPoly<Rational>::constant(value), order);
}

Cyclotomic Cyclotomic::zeta(unsigned long order) {
    Cyclotomic c;
    c.order_ = order;
    c.residue_ = reduce(UniPoly<Rational>::monomial(Rational(1), 1), order);
    return c;
}

Cyclotomic Cyclotomic::from_residue(UniPoly<Rational> residue, unsigned long order) {
    Cyclotomic c;
    c.order_ = order;
    c.residue_ = reduce(std::move(residue), order);
    return c;
}

Cyclotomic Cyclotomic::from_coordinates(const std::vector<Rational>& coords,
                                        unsigned long order) {
    if (coords.size() != euler_phi(order))
        throw DomainError("format_error", "coordinate count does not match phi(order)");
    return from_residue(UniPoly<Rational>(coords), order);
}

std::vector<Rational> Cyclotomic::coordinates() const {
    std::vector<Rational> out(euler_phi(order_), Rational(0));
    const auto& c = residue_.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
    return out;
}

bool Cyclotomic::is_one() const {
    return residue_.degree() == 0 && residue_.coeff(0) == 1;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational())
        throw DomainError("not_rational", "cyclotomic value is not rational");
    return residue_.coeff(0);
}

Cyclotomic Cyclotomic::embedded(unsigned long new_order) const {
    if (new_order == order_) return *this;
    if (new_order == 0 || new_order % order_ != 0)
        throw DomainError("out_of_range", "embedding target order must be a multiple");
    unsigned long m = new_order / order_;
    UniPoly<Rational> raw;
    const auto& c = residue_.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!is_zero(c[i])) raw.set_coeff(i * m, c[i]);
    Cyclotomic out;
    out.order_ = new_order;
    out.residue_ = reduce(std::move(raw), new_order);
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    out.residue_ = -out.residue_;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    unsigned long l = std::lcm(order_, o.order_);
    if (l != order_) *this = embedded(l);
    residue_ += (o.order_ == l ? o.residue_ : o.embedded(l).residue());
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    unsigned long l = std::lcm(order_, o.order_);
    if (l != order_) *this = embedded(l);
    residue_ -= (o.order_ == l ? o.residue_ : o.embedded(l).residue());
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    unsigned long l = std::lcm(order_, o.order_);
    if (l != order_) *this = embedded(l);
    residue_ = reduce(residue_ * (o.order_ == l ? o.residue_ : o.embedded(l).residue()), l);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    return *this *= o.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero_value())
        throw DomainError("division_by_zero", "inverse of zero");
    // Extended Euclid on (Phi_s, residue); Phi_s is irreducible and the
    // residue has lower degree, so the gcd is a nonzero constant.
    const UniPoly<Rational>& phi = phi_entry(order_).q;
    UniPoly<Rational> r0 = phi, r1 = residue_;
    UniPoly<Rational> t0, t1 = UniPoly<Rational>::constant(Rational(1));
    while (!r1.is_zero_poly()) {
        UniPoly<Rational> q, r2;
        UniPoly<Rational>::divrem(r0, r1, q, r2);
        UniPoly<Rational> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational lead = r0.coeff(0);
    Cyclotomic out;
    out.order_ = order_;
    out.residue_ = reduce(t0.scaled(Rational(1) / lead), order_);
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    if (order_ <= 2) return *this; // phi <= 1: every element is rational
    UniPoly<Rational> raw;
    const auto& c = residue_.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!is_zero(c[i])) raw.set_coeff(i * (order_ - 1), c[i]);
    Cyclotomic out;
    out.order_ = order_;
    out.residue_ = reduce(std::move(raw), order_);
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(Rational(1), order_);
    Cyclotomic base(*this);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long l = std::lcm(a.order_, b.order_);
    if (a.order_ == b.order_) return a.residue_ == b.residue_;
    return a.embedded(l).residue_ == b.embedded(l).residue_;
}

std::string Cyclotomic::to_string(const std::string& var) const {
    return residue_.to_string(var);
}

bool is_root_of_unity(const Cyclotomic& q) {
    if (q.is_zero_value())
        throw DomainError("zero_input", "root-of-unity test on zero");
    unsigned long l = std::lcm(2ul, q.order());
    return q.pow(static_cast<long>(l)).is_one();
}

std::optional<unsigned long> root_of_unity_order(const Cyclotomic& q) {
    if (!is_root_of_unity(q)) return std::nullopt;
    unsigned long l = std::lcm(2ul, q.order());
    for (unsigned long m = 1; m <= l; ++m) {
        if (l % m != 0) continue;
        if (q.pow(static_cast<long>(m)).is_one()) return m;
    }
    return l; // unreachable: m = l always passes
}

} // namespace qpolya

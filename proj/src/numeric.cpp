#include "qpolya/numeric.hpp"

#include <mpfr.h>

#include <cstdlib>

namespace qpolya {

std::string to_string(AbsClass c) {
    switch (c) {
        case AbsClass::Less: return "less";
        case AbsClass::Equal: return "equal";
        default: return "greater";
    }
}

unsigned long default_precision_cap() {
    if (const char* env = std::getenv("QPOLYA_MAX_PRECISION")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 64) return v;
    }
    return 4096;
}

namespace {

struct MpfrVal {
    mpfr_t v;
    explicit MpfrVal(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrVal() { mpfr_clear(v); }
    MpfrVal(const MpfrVal&) = delete;
    MpfrVal& operator=(const MpfrVal&) = delete;
};

Rational to_rational(const mpfr_t v) {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), v);
    return r;
}

struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    QInterval& operator+=(const QInterval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }

    QInterval scaled(const Rational& c) const {
        if (sgn(c) >= 0) return QInterval(lo * c, hi * c);
        return QInterval(hi * c, lo * c);
    }

    QInterval squared() const {
        if (sgn(lo) >= 0) return QInterval(lo * lo, hi * hi);
        if (sgn(hi) <= 0) return QInterval(hi * hi, lo * lo);
        Rational m = std::max(Rational(-lo), hi);
        return QInterval(Rational(0), m * m);
    }
};

// Enclosure of cos(2*pi*m/s) (want_cos) or sin(2*pi*m/s). The angle interval
// comes from directed-rounded pi; the trig enclosure widens the value at the
// lower endpoint by the angle width, using the Lipschitz bound
// |cos a - cos b| <= |a - b| (same for sin).
QInterval trig_enclosure(unsigned long m, unsigned long s, mpfr_prec_t prec, bool want_cos) {
    if (m == 0) return want_cos ? QInterval(Rational(1), Rational(1)) : QInterval();
    Rational f = make_rational(Int(2ul * m), Int(s));
    MpfrVal pi_lo(prec), pi_hi(prec), th_lo(prec), th_hi(prec), v_lo(prec), v_hi(prec), w(prec);
    mpfr_const_pi(pi_lo.v, MPFR_RNDD);
    mpfr_const_pi(pi_hi.v, MPFR_RNDU);
    mpfr_mul_q(th_lo.v, pi_lo.v, f.get_mpq_t(), MPFR_RNDD); // f >= 0
    mpfr_mul_q(th_hi.v, pi_hi.v, f.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(w.v, th_hi.v, th_lo.v, MPFR_RNDU);
    if (want_cos) {
        mpfr_cos(v_lo.v, th_lo.v, MPFR_RNDD);
        mpfr_cos(v_hi.v, th_lo.v, MPFR_RNDU);
    } else {
        mpfr_sin(v_lo.v, th_lo.v, MPFR_RNDD);
        mpfr_sin(v_hi.v, th_lo.v, MPFR_RNDU);
    }
    Rational width = to_rational(w.v);
    return QInterval(to_rational(v_lo.v) - width, to_rational(v_hi.v) + width);
}

} // namespace

AbsClass compare_abs_to_one(const Cyclotomic& q, unsigned long precision_cap) {
    if (q.is_zero_value())
        throw DomainError("zero_input", "absolute-value comparison on zero");
    Cyclotomic norm2 = q * q.conj(); // exactly |q|^2
    if (norm2.is_one()) return AbsClass::Equal;
    if (norm2.is_rational()) {
        // covers all orders whose maximal real subfield is Q (s = 1, 2, 3, 4, 6)
        // plus anything else that happens to have a rational norm
        return norm2.to_rational() < 1 ? AbsClass::Less : AbsClass::Greater;
    }
    if (precision_cap == 0) precision_cap = default_precision_cap();
    unsigned long s = q.order();
    std::vector<Rational> coords = q.coordinates();
    for (unsigned long prec = 64;; prec *= 2) {
        if (prec > precision_cap)
            throw DomainError("undecided",
                              "absolute-value comparison undecided at precision cap " +
                                  std::to_string(precision_cap));
        QInterval re, im;
        for (unsigned long m = 0; m < coords.size(); ++m) {
            if (sgn(coords[m]) == 0) continue;
            re += trig_enclosure(m, s, static_cast<mpfr_prec_t>(prec), true).scaled(coords[m]);
            im += trig_enclosure(m, s, static_cast<mpfr_prec_t>(prec), false).scaled(coords[m]);
        }
        QInterval n2 = re.squared();
        n2 += im.squared();
        if (n2.hi < 1) return AbsClass::Less;
        if (n2.lo > 1) return AbsClass::Greater;
    }
}

double log_abs_approx(const Cyclotomic& v) {
    if (v.is_zero_value())
        throw DomainError("zero_input", "log of zero");
    const mpfr_prec_t prec = 256;
    if (v.is_rational()) {
        Rational r = v.to_rational();
        MpfrVal num(prec), den(prec);
        mpfr_set_z(num.v, r.get_num().get_mpz_t(), MPFR_RNDN);
        mpfr_abs(num.v, num.v, MPFR_RNDN);
        mpfr_log(num.v, num.v, MPFR_RNDN);
        mpfr_set_z(den.v, r.get_den().get_mpz_t(), MPFR_RNDN);
        mpfr_log(den.v, den.v, MPFR_RNDN);
        mpfr_sub(num.v, num.v, den.v, MPFR_RNDN);
        return mpfr_get_d(num.v, MPFR_RNDN);
    }
    unsigned long s = v.order();
    std::vector<Rational> coords = v.coordinates();
    MpfrVal re(prec), im(prec), th(prec), t(prec), pi(prec);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    mpfr_set_zero(re.v, 1);
    mpfr_set_zero(im.v, 1);
    for (unsigned long m = 0; m < coords.size(); ++m) {
        if (sgn(coords[m]) == 0) continue;
        Rational f = make_rational(Int(2ul * m), Int(s));
        mpfr_mul_q(th.v, pi.v, f.get_mpq_t(), MPFR_RNDN);
        mpfr_cos(t.v, th.v, MPFR_RNDN);
        mpfr_mul_q(t.v, t.v, coords[m].get_mpq_t(), MPFR_RNDN);
        mpfr_add(re.v, re.v, t.v, MPFR_RNDN);
        mpfr_sin(t.v, th.v, MPFR_RNDN);
        mpfr_mul_q(t.v, t.v, coords[m].get_mpq_t(), MPFR_RNDN);
        mpfr_add(im.v, im.v, t.v, MPFR_RNDN);
    }
    mpfr_sqr(re.v, re.v, MPFR_RNDN);
    mpfr_sqr(im.v, im.v, MPFR_RNDN);
    mpfr_add(re.v, re.v, im.v, MPFR_RNDN);
    mpfr_log(re.v, re.v, MPFR_RNDN);
    return mpfr_get_d(re.v, MPFR_RNDN) / 2.0;
}

} // namespace qpolya

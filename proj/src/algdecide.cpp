#include "qpolya/algdecide.hpp"

#include <algorithm>
#include <numeric>

#include "qpolya/linalg.hpp"

namespace qpolya {

UniPoly<Int> degree_growth(const LineSpec& spec) {
    require_admissible(spec);
    // (k + b j)(n - k + (a-b) j)
    Int k(spec.k), nk(spec.n - spec.k), b(spec.b), ab(spec.a - spec.b);
    std::vector<Int> c{k * nk, k * ab + b * nk, b * ab};
    return UniPoly<Int>(std::move(c));
}

Verdict decide(const LineSpec& spec, const Cyclotomic& q, const DecideConfig& cfg) {
    require_admissible(spec);
    if (q.is_zero_value())
        throw DomainError("zero_input", "decision requires a nonzero q");
    Verdict v;
    if (is_root_of_unity(q)) {
        for (int t = 1; t <= cfg.max_diagonal; ++t) {
            std::size_t n = std::max({cfg.verify_order,
                                      static_cast<std::size_t>(2 * (t + 1) * (t + 1)),
                                      static_cast<std::size_t>((t + 1) * (t + 1) + 2 * t + 5)});
            SeriesPrefix pfx = prefix(spec, q, n);
            if (auto eq = guess_algebraic(pfx.terms, t, t)) {
                v.kind = Verdict::Kind::Algebraic;
                v.equation = std::move(eq);
                return v;
            }
        }
        v.kind = Verdict::Kind::Undecided;
        v.undecided = UndecidedReport{cfg.max_diagonal, cfg.verify_order};
        return v;
    }
    AbsClass cls = compare_abs_to_one(q);
    v.kind = Verdict::Kind::Transcendental;
    if (cls == AbsClass::Greater) {
        v.degree_growth = DegreeGrowthCertificate{
            degree_growth(spec), Int(spec.b) * Int(spec.a - spec.b), cls};
        return v;
    }
    NotRootOfUnityCertificate cert;
    cert.exponent = std::lcm(2ul, q.order());
    cert.abs_class = cls;
    if (cfg.include_guess_report) {
        std::size_t terms_needed = static_cast<std::size_t>(
            std::max((cfg.report_dx + 1) * (cfg.report_dz + 1) + cfg.report_dx + cfg.report_dz + 5,
                     (cfg.report_rec_order + 1) * (cfg.report_rec_degree + 1) +
                         cfg.report_rec_order + 10));
        SeriesPrefix pfx = prefix(spec, q, terms_needed);
        auto eq = guess_algebraic(pfx.terms, cfg.report_dx, cfg.report_dz);
        auto rec = guess_precurrence(pfx.terms, cfg.report_rec_order, cfg.report_rec_degree);
        if (eq || rec)
            throw Error("inconsistency",
                        "guess search found a relation for a certified transcendental series");
        cert.searched = GuessSearchReport{cfg.report_dx, cfg.report_dz, cfg.report_rec_order,
                                          cfg.report_rec_degree, terms_needed};
    }
    v.not_root_of_unity = std::move(cert);
    return v;
}

GrowthReport growth_report(const LineSpec& spec, const Cyclotomic& q, std::size_t count) {
    require_admissible(spec);
    if (q.is_zero_value())
        throw DomainError("zero_input", "growth report requires a nonzero q");
    if (is_root_of_unity(q) || compare_abs_to_one(q) != AbsClass::Greater)
        throw DomainError("wrong_abs_class", "growth report requires |q| > 1");
    SeriesPrefix pfx = prefix(spec, q, count + 1);
    GrowthReport rep;
    rep.rows.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        double lr = log_abs_approx(pfx.terms[j]) / (static_cast<double>(j) * static_cast<double>(j));
        rep.rows.push_back(GrowthRow{static_cast<long>(j), lr});
    }
    bool central_two = (spec == LineSpec{0, 0, 2, 1}) && q.is_rational() && q.to_rational() == 2;
    if (central_two) {
        rep.exact_checked = true;
        rep.exact_holds = true;
        for (std::size_t j = 1; j <= count; ++j) {
            Rational u = pfx.terms[j].to_rational();
            Int bound = Int(1) << static_cast<unsigned long>(j * j);
            if (!(u.get_den() == 1 && u.get_num() > bound)) {
                rep.exact_holds = false;
                rep.first_violation = static_cast<long>(j);
                break;
            }
        }
    }
    return rep;
}

ZeroTestResult zero_test_via_samples(const BiPoly<Cyclotomic>& p, const Cyclotomic& q) {
    if (q.is_zero_value())
        throw DomainError("zero_input", "zero test requires a nonzero q");
    long d = p.is_zero_poly() ? 0 : p.total_degree();
    auto ord = root_of_unity_order(q);
    if (ord && static_cast<long>(*ord) <= d)
        throw DomainError("root_of_unity_order_too_small",
                          "sample-based zero test invalid: q has order " + std::to_string(*ord) +
                              " <= total degree " + std::to_string(d));
    std::size_t samples = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    Cyclotomic qj(Rational(1), q.order());
    for (std::size_t j = 1; j <= samples; ++j) {
        qj *= q;
        Cyclotomic val = p.eval(Cyclotomic(static_cast<long>(j)), qj);
        if (!val.is_zero_value()) {
            if (p.is_zero_poly())
                throw Error("inconsistency", "zero polynomial produced a nonzero sample");
            return ZeroTestResult{false, static_cast<long>(j), std::move(val), samples};
        }
    }
    if (!p.is_zero_poly())
        throw Error("inconsistency",
                    "all samples of a structurally nonzero polynomial vanished");
    ZeroTestResult r;
    r.identically_zero = true;
    r.samples = samples;
    return r;
}

VandermondeFactorization vandermonde_det(int d, int max_d) {
    if (d < 0) throw DomainError("out_of_range", "matrix parameter must be nonnegative");
    if (d > max_d)
        throw DomainError("size_cap", "generalized Vandermonde capped at d = " +
                                          std::to_string(max_d));
    std::size_t dim = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    Matrix<UniPoly<Rational>> m(dim, dim);
    std::size_t row = 0;
    for (int j = 0; j <= d; ++j) {
        for (int i = 0; i + j <= d; ++i, ++row) {
            for (std::size_t c = 0; c < dim; ++c) {
                unsigned long nval = static_cast<unsigned long>(c + 1);
                m.at(row, c) = UniPoly<Rational>::monomial(
                    Rational(pow_int(Int(nval), static_cast<unsigned long>(i))),
                    nval * static_cast<unsigned long>(j));
            }
        }
    }
    VandermondeFactorization out;
    out.det = det_bareiss(std::move(m));
    if (out.det.is_zero_poly())
        throw Error("inconsistency", "generalized Vandermonde determinant vanished");

    // peel z^e, then cyclotomic factors by trial division; phi(s) <= deg
    // bounds the candidate orders via s <= 2*deg^2 + 2
    const auto& coeffs = out.det.coeffs();
    std::size_t e = 0;
    while (e < coeffs.size() && is_zero(coeffs[e])) ++e;
    out.z_power = static_cast<unsigned long>(e);
    UniPoly<Rational> g = out.det.divexact(UniPoly<Rational>::monomial(Rational(1), e));
    long dg = g.degree();
    unsigned long s_max = static_cast<unsigned long>(2 * dg * dg + 2);
    for (unsigned long s = 1; s <= s_max && g.degree() >= 1; ++s) {
        if (static_cast<long>(euler_phi(s)) > g.degree()) continue;
        UniPoly<Rational> phi = to_rational_poly(cyclotomic_poly(s));
        while (g.degree() >= phi.degree() && g.divisible_by(phi)) {
            g = g.divexact(phi);
            out.cyclotomic_multiplicities[s] += 1;
        }
    }
    if (g.degree() >= 1)
        throw Error("inconsistent_factorization",
                    "determinant residue is not a product of cyclotomics");
    out.constant = g.coeff(0);
    return out;
}

namespace {

struct Theorem4Factor {
    long y_deg = 0;
    long q_exp = 0; // factor is y^y_deg * q^q_exp - 1
};

std::vector<Theorem4Factor> theorem4_factors(const LineSpec& spec, int r, int i) {
    std::vector<Theorem4Factor> fs;
    for (long l = 1; l <= static_cast<long>(i) * spec.a; ++l)
        fs.push_back({spec.a, spec.n + l});
    for (long l = static_cast<long>(i) * spec.b + 1; l <= static_cast<long>(r) * spec.b; ++l)
        fs.push_back({spec.b, spec.k + l});
    long ab = spec.a - spec.b;
    for (long l = static_cast<long>(i) * ab + 1; l <= static_cast<long>(r) * ab; ++l)
        fs.push_back({ab, spec.n - spec.k + l});
    return fs;
}

} // namespace

BiPoly<Int> theorem4_factor_poly(const LineSpec& spec, int r, int i) {
    require_admissible(spec);
    if (r < 0 || i < 0 || i > r)
        throw DomainError("out_of_range", "factor index must satisfy 0 <= i <= r");
    BiPoly<Int> p = BiPoly<Int>::constant(Int(1));
    for (const auto& f : theorem4_factors(spec, r, i)) {
        BiPoly<Int> factor = BiPoly<Int>::monomial(Int(1), f.y_deg, f.q_exp);
        factor -= BiPoly<Int>::constant(Int(1));
        p *= factor;
    }
    return p;
}

BiPoly<Cyclotomic> build_theorem4_polynomial(const LineSpec& spec, const Cyclotomic& q,
                                             const PRecurrence& rec) {
    require_admissible(spec);
    if (q.is_zero_value())
        throw DomainError("zero_input", "refuter polynomial requires a nonzero q");
    BiPoly<Cyclotomic> p;
    for (int i = 0; i <= rec.order; ++i) {
        UniPoly<Cyclotomic> pi;
        pi.set_coeff(0, Cyclotomic(Rational(1), q.order()));
        for (const auto& f : theorem4_factors(spec, rec.order, i)) {
            UniPoly<Cyclotomic> factor =
                UniPoly<Cyclotomic>::monomial(q.pow(f.q_exp), static_cast<std::size_t>(f.y_deg));
            factor -= UniPoly<Cyclotomic>::constant(Cyclotomic(1));
            pi *= factor;
        }
        const UniPoly<Cyclotomic>& ci = rec.coeffs[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < ci.coeffs().size(); ++t) {
            if (ci.coeff(t).is_zero_value()) continue;
            for (std::size_t mdeg = 0; mdeg < pi.coeffs().size(); ++mdeg) {
                if (pi.coeff(mdeg).is_zero_value()) continue;
                p.add_term(static_cast<long>(t), static_cast<long>(mdeg),
                           ci.coeff(t) * pi.coeff(mdeg));
            }
        }
    }
    return p;
}

LeadingMonomialReport leading_monomial_check(const LineSpec& spec, int r) {
    require_admissible(spec);
    if (r < 1) throw DomainError("out_of_range", "leading-monomial check needs r >= 1");
    LeadingMonomialReport rep;
    rep.degrees_match = true;
    long best = -1;
    for (int i = 0; i <= r; ++i) {
        long formula = static_cast<long>(i) * spec.a * spec.a +
                       static_cast<long>(r - i) * spec.b * spec.b +
                       static_cast<long>(r - i) * (spec.a - spec.b) * (spec.a - spec.b);
        long sym = 0;
        for (const auto& f : theorem4_factors(spec, r, i)) sym += f.y_deg;
        rep.rows.push_back(LeadingMonomialRow{i, formula, sym});
        if (formula != sym) rep.degrees_match = false;
        if (i < r) best = std::max(best, sym);
    }
    rep.unique_max_at_r = rep.rows.back().symbolic_degree > best;
    // leading coefficient of P_r in y: product of the factor leading monomials
    long ydeg = 0;
    UniPoly<Int> lead = UniPoly<Int>::constant(Int(1));
    for (const auto& f : theorem4_factors(spec, r, r)) {
        ydeg += f.y_deg;
        lead = lead * UniPoly<Int>::monomial(Int(1), static_cast<std::size_t>(f.q_exp));
    }
    rep.leading_y_degree = ydeg;
    rep.leading_coeff_in_q = lead;
    long ra = static_cast<long>(r) * spec.a;
    UniPoly<Int> expected = UniPoly<Int>::monomial(
        Int(1), static_cast<std::size_t>(ra * spec.n + ra * (ra + 1) / 2));
    rep.leading_matches =
        (ydeg == static_cast<long>(spec.a) * spec.a * r) && (lead == expected);
    rep.ok = rep.degrees_match && rep.unique_max_at_r && rep.leading_matches;
    return rep;
}

} // namespace qpolya

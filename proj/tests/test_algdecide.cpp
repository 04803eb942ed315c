#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qpolya/algdecide.hpp"
#include "qpolya/linalg.hpp"

using namespace qpolya;

namespace {

const LineSpec central{0, 0, 2, 1};

Cyclotomic rat(long n, long d = 1) { return Cyclotomic(make_rational(Int(n), Int(d))); }

BiPoly<Cyclotomic> equation(std::initializer_list<std::tuple<long, long, Cyclotomic>> ts) {
    BiPoly<Cyclotomic> p;
    for (const auto& [i, j, c] : ts) p.add_term(i, j, c);
    return p;
}

// recursive cofactor expansion along the first row; independent of det_bareiss
UniPoly<Rational> det_cofactor(const Matrix<UniPoly<Rational>>& m) {
    std::size_t n = m.rows;
    if (n == 1) return m.at(0, 0);
    UniPoly<Rational> det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero_poly()) continue;
        Matrix<UniPoly<Rational>> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = m.at(r, k);
            }
        }
        UniPoly<Rational> term = m.at(0, c) * det_cofactor(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// the matrix vandermonde_det factors, rebuilt independently
Matrix<UniPoly<Rational>> vandermonde_matrix(int d) {
    std::size_t dim = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    Matrix<UniPoly<Rational>> m(dim, dim);
    std::size_t row = 0;
    for (int j = 0; j <= d; ++j) {
        for (int i = 0; i + j <= d; ++i, ++row) {
            for (std::size_t col = 0; col < dim; ++col) {
                long n = static_cast<long>(col) + 1;
                Rational scale(pow_int(Int(n), static_cast<unsigned long>(i)));
                m.at(row, col) = UniPoly<Rational>::monomial(
                    scale, static_cast<std::size_t>(n) * static_cast<std::size_t>(j));
            }
        }
    }
    return m;
}

std::mt19937 rng(771120u);

BiPoly<Cyclotomic> random_bipoly(int max_total_deg) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<int> count(1, 6);
    BiPoly<Cyclotomic> p;
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        std::uniform_int_distribution<long> di(0, max_total_deg);
        long i = di(rng);
        std::uniform_int_distribution<long> dj(0, max_total_deg - i);
        long j = dj(rng);
        p.add_term(i, j, Cyclotomic(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("decide: q = 1 is algebraic with the classic equation") {
    Verdict v = decide(central, Cyclotomic(1));
    REQUIRE(v.kind == Verdict::Kind::Algebraic);
    REQUIRE(v.equation.has_value());
    CHECK(v.equation->poly ==
          equation({{0, 0, rat(1)}, {0, 2, rat(-1)}, {1, 2, rat(4)}}));
    CHECK(v.equation->verified_order >= 60);
    CHECK(!v.degree_growth.has_value());
    CHECK(!v.not_root_of_unity.has_value());
}

TEST_CASE("decide: q = -1 is algebraic") {
    Verdict v = decide(central, Cyclotomic(-1));
    REQUIRE(v.kind == Verdict::Kind::Algebraic);
    CHECK(v.equation->poly ==
          equation({{0, 0, rat(1)}, {0, 2, rat(-1)}, {2, 2, rat(4)}}));
    CHECK(v.equation->verified_order >= 60);
}

TEST_CASE("decide: q = zeta_3 is algebraic") {
    Cyclotomic w = Cyclotomic::zeta(3);
    Verdict v = decide(central, w);
    REQUIRE(v.kind == Verdict::Kind::Algebraic);
    CHECK(v.equation->poly == equation({{0, 0, Cyclotomic(1, 3)},
                                        {1, 0, Cyclotomic(2) + Cyclotomic(2) * w},
                                        {2, 0, w},
                                        {0, 2, Cyclotomic(-1, 3)},
                                        {3, 2, Cyclotomic(4, 3)}}));
    CHECK(v.equation->verified_order >= 60);
}

TEST_CASE("decide: q = zeta_5 needs the diagonal escalation up to (5, 5)") {
    Cyclotomic z = Cyclotomic::zeta(5);
    Verdict v = decide(central, z);
    REQUIRE(v.kind == Verdict::Kind::Algebraic);
    // (1 - 4x^5) z^2 = (1 + (1 + w) x + w^2 x^2)^2 normalized
    Cyclotomic z2 = z * z;
    CHECK(v.equation->poly ==
          equation({{0, 0, Cyclotomic(1, 5)},
                    {1, 0, Cyclotomic(2) + Cyclotomic(2) * z},
                    {2, 0, z * z * Cyclotomic(2) + (Cyclotomic(1) + z) * (Cyclotomic(1) + z)},
                    {3, 0, Cyclotomic(2) * z2 * (Cyclotomic(1) + z)},
                    {4, 0, z2 * z2},
                    {0, 2, Cyclotomic(-1, 5)},
                    {5, 2, Cyclotomic(4, 5)}}));
    CHECK(v.equation->dx == 5);
    CHECK(v.equation->verified_order >= 60);
}

TEST_CASE("decide: |q| > 1 certifies transcendence by degree growth") {
    Verdict v = decide(central, Cyclotomic(2));
    REQUIRE(v.kind == Verdict::Kind::Transcendental);
    REQUIRE(v.degree_growth.has_value());
    CHECK(!v.equation.has_value());
    UniPoly<Int> jsq;
    jsq.set_coeff(2, Int(1));
    CHECK(v.degree_growth->degree_poly == jsq);
    CHECK(v.degree_growth->leading_coefficient == 1);
    CHECK(v.degree_growth->abs_class == AbsClass::Greater);

    Verdict w = decide({1, 1, 3, 2}, rat(-5, 2));
    REQUIRE(w.kind == Verdict::Kind::Transcendental);
    REQUIRE(w.degree_growth.has_value());
    // (1 + 2j) j = j + 2 j^2, leading b (a - b) = 2
    UniPoly<Int> expect;
    expect.set_coeff(1, Int(1));
    expect.set_coeff(2, Int(2));
    CHECK(w.degree_growth->degree_poly == expect);
    CHECK(w.degree_growth->leading_coefficient == 2);
}

TEST_CASE("decide: unimodular non-torsion q certifies by the torsion bound") {
    Cyclotomic q = (Cyclotomic(3) + Cyclotomic(4) * Cyclotomic::zeta(4)) / Cyclotomic(5);
    Verdict v = decide(central, q);
    REQUIRE(v.kind == Verdict::Kind::Transcendental);
    REQUIRE(v.not_root_of_unity.has_value());
    CHECK(v.not_root_of_unity->exponent == 4); // lcm(2, order 4)
    CHECK(v.not_root_of_unity->abs_class == AbsClass::Equal);
    CHECK(!v.not_root_of_unity->searched.has_value());
    CHECK(!q.pow(4).is_one()); // the certificate's claim, directly

    DecideConfig cfg;
    cfg.include_guess_report = true;
    cfg.report_dx = 2;
    cfg.report_dz = 2;
    cfg.report_rec_order = 2;
    cfg.report_rec_degree = 2;
    Verdict w = decide(central, q, cfg);
    REQUIRE(w.not_root_of_unity.has_value());
    REQUIRE(w.not_root_of_unity->searched.has_value());
    CHECK(w.not_root_of_unity->searched->dx == 2);
    CHECK(w.not_root_of_unity->searched->rec_order == 2);
    CHECK(w.not_root_of_unity->searched->terms_used > 0);

    // |q| < 1, not a root of unity, same certificate with Less
    Verdict u = decide(central, rat(1, 2));
    REQUIRE(u.kind == Verdict::Kind::Transcendental);
    REQUIRE(u.not_root_of_unity.has_value());
    CHECK(u.not_root_of_unity->exponent == 2);
    CHECK(u.not_root_of_unity->abs_class == AbsClass::Less);
}

TEST_CASE("decide: escalation cap yields Undecided with the search bounds") {
    DecideConfig cfg;
    cfg.max_diagonal = 2;
    Verdict v = decide(central, Cyclotomic::zeta(3), cfg); // needs t = 3
    REQUIRE(v.kind == Verdict::Kind::Undecided);
    REQUIRE(v.undecided.has_value());
    CHECK(v.undecided->max_diagonal == 2);
    CHECK(!v.equation.has_value());
}

TEST_CASE("decide input validation") {
    CHECK_THROWS_AS(decide(central, Cyclotomic(0)), DomainError);
    CHECK_THROWS_AS(decide({5, 1, 2, 1}, Cyclotomic(2)), DomainError);
}

TEST_CASE("degree polynomial of the coefficient line") {
    UniPoly<Int> jsq;
    jsq.set_coeff(2, Int(1));
    CHECK(degree_growth(central) == jsq);

    UniPoly<Int> expect;
    expect.set_coeff(1, Int(1));
    expect.set_coeff(2, Int(2));
    CHECK(degree_growth({1, 1, 3, 2}) == expect);
    CHECK(degree_growth({1, 0, 3, 1}) == expect);

    for (long j = 0; j <= 6; ++j)
        CHECK(degree_growth(central).eval(Int(j)) ==
              symbolic_coefficient(central, j).degree());
}

TEST_CASE("growth report: exact doubling bound at q = 2") {
    GrowthReport rep = growth_report(central, Cyclotomic(2), 8);
    REQUIRE(rep.rows.size() == 8);
    CHECK(rep.exact_checked);
    CHECK(rep.exact_holds);
    CHECK(rep.first_violation == -1);
    for (const auto& row : rep.rows) CHECK(row.log_ratio > std::log(2.0));

    GrowthReport frac = growth_report(central, rat(3, 2), 10);
    CHECK(!frac.exact_checked);
    CHECK(std::fabs(frac.rows.back().log_ratio - std::log(1.5)) < 0.06);

    CHECK_THROWS_AS(growth_report(central, Cyclotomic(1), 4), DomainError);
    CHECK_THROWS_AS(growth_report(central, rat(1, 2), 4), DomainError);
    try {
        growth_report(central, Cyclotomic::zeta(4), 4);
        FAIL("expected wrong_abs_class");
    } catch (const DomainError& e) {
        CHECK(e.code() == "wrong_abs_class");
    }
}

TEST_CASE("finite zero test: pinned cases") {
    BiPoly<Cyclotomic> x;
    x.add_term(1, 0, Cyclotomic(1));
    ZeroTestResult r = zero_test_via_samples(x, Cyclotomic(2));
    CHECK(!r.identically_zero);
    CHECK(r.witness_j == 1);
    CHECK(r.witness_value == Cyclotomic(1));
    CHECK(r.samples == 3); // (d+1)(d+2)/2 at d = 1

    ZeroTestResult z = zero_test_via_samples(BiPoly<Cyclotomic>(), Cyclotomic(2));
    CHECK(z.identically_zero);
    CHECK(z.samples == 1);

    // vanishes at the first two sample points but not identically
    BiPoly<Cyclotomic> p; // (x - 1)(x - 2) = x^2 - 3x + 2
    p.add_term(2, 0, Cyclotomic(1));
    p.add_term(1, 0, Cyclotomic(-3));
    p.add_term(0, 0, Cyclotomic(2));
    ZeroTestResult late = zero_test_via_samples(p, Cyclotomic(2));
    CHECK(!late.identically_zero);
    CHECK(late.witness_j == 3);

    // nonzero constant is fine even at q = 1
    BiPoly<Cyclotomic> c;
    c.add_term(0, 0, Cyclotomic(5));
    CHECK(!zero_test_via_samples(c, Cyclotomic(1)).identically_zero);
}

TEST_CASE("finite zero test: validity guards") {
    BiPoly<Cyclotomic> p;
    p.add_term(3, 0, Cyclotomic(1)); // total degree 3
    CHECK_THROWS_AS(zero_test_via_samples(p, Cyclotomic(0)), DomainError);
    try {
        zero_test_via_samples(p, Cyclotomic::zeta(3)); // order 3 <= d = 3
        FAIL("expected root_of_unity_order_too_small");
    } catch (const DomainError& e) {
        CHECK(e.code() == "root_of_unity_order_too_small");
    }
    // order 5 > d = 3 is fine
    CHECK(!zero_test_via_samples(p, Cyclotomic::zeta(5)).identically_zero);
    CHECK_THROWS_AS(zero_test_via_samples(p, Cyclotomic(1)), DomainError);
}

TEST_CASE("finite zero test: random nonzero polynomials always witness") {
    for (int it = 0; it < 200; ++it) {
        BiPoly<Cyclotomic> p = random_bipoly(4);
        if (p.is_zero_poly()) continue;
        ZeroTestResult r = zero_test_via_samples(p, Cyclotomic(2));
        CHECK(!r.identically_zero);
        CHECK(r.witness_j >= 1);
        CHECK(r.witness_j <= 15); // (4+1)(4+2)/2
        CHECK(!r.witness_value.is_zero_value());
    }
}

TEST_CASE("generalized Vandermonde determinants factor over cyclotomics") {
    VandermondeFactorization f0 = vandermonde_det(0);
    CHECK(f0.det == UniPoly<Rational>::constant(Rational(1)));
    CHECK(f0.constant == Rational(1));
    CHECK(f0.z_power == 0);
    CHECK(f0.cyclotomic_multiplicities.empty());

    VandermondeFactorization f1 = vandermonde_det(1);
    std::vector<Rational> zz{Rational(0), Rational(1), Rational(-2), Rational(1)};
    CHECK(f1.det == UniPoly<Rational>(zz)); // z (z - 1)^2
    CHECK(f1.constant == Rational(1));
    CHECK(f1.z_power == 1);
    REQUIRE(f1.cyclotomic_multiplicities.count(1) == 1);
    CHECK(f1.cyclotomic_multiplicities.at(1) == 2);
    CHECK(f1.cyclotomic_multiplicities.size() == 1);

    // d = 1 and d = 2 against the cofactor oracle
    CHECK(det_bareiss(vandermonde_matrix(1)) == f1.det);
    VandermondeFactorization f2 = vandermonde_det(2);
    CHECK(f2.det == det_cofactor(vandermonde_matrix(2)));

    // factorization reassembles exactly, for every d up to the cap
    for (int d = 0; d <= 3; ++d) {
        VandermondeFactorization f = vandermonde_det(d);
        UniPoly<Rational> rebuilt =
            UniPoly<Rational>::monomial(f.constant, f.z_power);
        for (const auto& [s, mult] : f.cyclotomic_multiplicities) {
            UniPoly<Rational> phi = to_rational_poly(cyclotomic_poly(s));
            for (unsigned long m = 0; m < mult; ++m) rebuilt *= phi;
        }
        CHECK(rebuilt == f.det);
        CHECK(sgn(f.constant) != 0);
        // evaluation probe: det of the numeric matrix at several points
        for (long point : {2L, 3L, -1L}) {
            Matrix<UniPoly<Rational>> sym = vandermonde_matrix(d);
            Matrix<Rational> at(sym.rows, sym.cols);
            for (std::size_t r = 0; r < sym.rows; ++r)
                for (std::size_t c = 0; c < sym.cols; ++c)
                    at.at(r, c) = sym.at(r, c).eval(Rational(point));
            CHECK(det_bareiss(at) == f.det.eval(Rational(point)));
        }
    }

    CHECK_THROWS_AS(vandermonde_det(-1), DomainError);
    try {
        vandermonde_det(4);
        FAIL("expected size_cap");
    } catch (const DomainError& e) {
        CHECK(e.code() == "size_cap");
    }
    CHECK(vandermonde_det(1, 1).det == f1.det); // cap override
}

TEST_CASE("refuter polynomial: order 0 collapses to c_0") {
    PRecurrence rec;
    rec.order = 0;
    rec.degree = 1;
    UniPoly<Cyclotomic> c0;
    c0.set_coeff(0, Cyclotomic(7));
    c0.set_coeff(1, Cyclotomic(-2));
    rec.coeffs = {c0};
    BiPoly<Cyclotomic> p = build_theorem4_polynomial(central, Cyclotomic(3), rec);
    BiPoly<Cyclotomic> expect;
    expect.add_term(0, 0, Cyclotomic(7));
    expect.add_term(1, 0, Cyclotomic(-2));
    CHECK(p == expect);
}

TEST_CASE("refuter polynomial satisfies the clearing identity at q = 3") {
    // candidate recurrence (true at q = 1, false at q = 3):
    //   (j + 1) u_{j+1} - (4j + 2) u_j = 0
    PRecurrence rec;
    rec.order = 1;
    rec.degree = 1;
    UniPoly<Cyclotomic> c0, c1;
    c0.set_coeff(0, Cyclotomic(-2));
    c0.set_coeff(1, Cyclotomic(-4));
    c1.set_coeff(0, Cyclotomic(1));
    c1.set_coeff(1, Cyclotomic(1));
    rec.coeffs = {c0, c1};

    Cyclotomic q(3);
    BiPoly<Cyclotomic> p = build_theorem4_polynomial(central, q, rec);
    SeriesPrefix pfx = prefix(central, q, 12);

    for (long j = 0; j <= 8; ++j) {
        Cyclotomic qj = q.pow(j);
        Cyclotomic lhs = p.eval(Cyclotomic(j), qj) * pfx.terms[static_cast<std::size_t>(j)];
        // residual times the cleared denominators: r*b = 1 factor (q^(j+1) - 1)
        // and r*(a-b) = 1 factor (q^(j+1) - 1)
        Cyclotomic residual =
            c0.eval(Cyclotomic(j)) * pfx.terms[static_cast<std::size_t>(j)] +
            c1.eval(Cyclotomic(j)) * pfx.terms[static_cast<std::size_t>(j) + 1];
        Cyclotomic denom = q.pow(j + 1) - Cyclotomic(1);
        CHECK(lhs == residual * denom * denom);
        CHECK(!residual.is_zero_value()); // the candidate really fails at q = 3
        CHECK(!p.eval(Cyclotomic(j), qj).is_zero_value());
    }
}

TEST_CASE("refuter vanishing tracks engineered residual zeros") {
    // (j - 2) * [the q = 1 recurrence]: residual vanishes exactly at j = 2
    UniPoly<Cyclotomic> factor;
    factor.set_coeff(0, Cyclotomic(-2));
    factor.set_coeff(1, Cyclotomic(1));
    PRecurrence rec;
    rec.order = 1;
    rec.degree = 2;
    UniPoly<Cyclotomic> c0, c1;
    c0.set_coeff(0, Cyclotomic(-2));
    c0.set_coeff(1, Cyclotomic(-4));
    c1.set_coeff(0, Cyclotomic(1));
    c1.set_coeff(1, Cyclotomic(1));
    rec.coeffs = {c0 * factor, c1 * factor};

    Cyclotomic q(3);
    BiPoly<Cyclotomic> p = build_theorem4_polynomial(central, q, rec);
    SeriesPrefix pfx = prefix(central, q, 12);
    for (long j = 0; j <= 8; ++j) {
        Cyclotomic value = p.eval(Cyclotomic(j), q.pow(j));
        Cyclotomic residual =
            rec.coeffs[0].eval(Cyclotomic(j)) * pfx.terms[static_cast<std::size_t>(j)] +
            rec.coeffs[1].eval(Cyclotomic(j)) * pfx.terms[static_cast<std::size_t>(j) + 1];
        CHECK(value.is_zero_value() == residual.is_zero_value());
        CHECK((j == 2) == value.is_zero_value());
    }
}

TEST_CASE("factor degree bookkeeping for the refuter blocks") {
    LeadingMonomialReport r1 = leading_monomial_check(central, 1);
    REQUIRE(r1.rows.size() == 2);
    CHECK(r1.rows[0].formula_degree == 2); // 0 + 1*1 + 1*1
    CHECK(r1.rows[1].formula_degree == 4); // a^2
    CHECK(r1.degrees_match);
    CHECK(r1.unique_max_at_r);
    CHECK(r1.leading_y_degree == 4);
    CHECK(r1.leading_coeff_in_q == UniPoly<Int>::monomial(Int(1), 3)); // q^3
    CHECK(r1.ok);

    LeadingMonomialReport r2 = leading_monomial_check({2, 1, 3, 1}, 2);
    REQUIRE(r2.rows.size() == 3);
    CHECK(r2.rows[0].formula_degree == 10);
    CHECK(r2.rows[1].formula_degree == 14);
    CHECK(r2.rows[2].formula_degree == 18);
    CHECK(r2.leading_y_degree == 18);
    // q^(r a n + r a (r a + 1) / 2) = q^(12 + 21)
    CHECK(r2.leading_coeff_in_q == UniPoly<Int>::monomial(Int(1), 33));
    CHECK(r2.ok);

    for (long a = 2; a <= 6; ++a) {
        for (long b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (int r = 1; r <= 5; ++r)
                CHECK(leading_monomial_check({0, 0, a, b}, r).ok);
        }
    }

    CHECK_THROWS_AS(leading_monomial_check(central, 0), DomainError);
}

TEST_CASE("fully expanded P_r has the predicted leading term") {
    struct Triple {
        LineSpec spec;
        int r;
    };
    for (const Triple& t : {Triple{{1, 0, 2, 1}, 1}, Triple{{1, 0, 3, 1}, 2},
                            Triple{{1, 1, 3, 2}, 2}}) {
        const long a = t.spec.a, n = t.spec.n;
        BiPoly<Int> pr = theorem4_factor_poly(t.spec, t.r, t.r);
        long ra = static_cast<long>(t.r) * a;
        CHECK(pr.deg_first() == a * ra); // deg_y = a^2 r

        // coefficient of y^(a^2 r) as a polynomial in q
        UniPoly<Int> lead = pr.coeff_of_first(a * ra);
        CHECK(lead == UniPoly<Int>::monomial(Int(1), static_cast<std::size_t>(
                                                          ra * n + ra * (ra + 1) / 2)));

        // and the bookkeeping agrees with the full expansion degree
        LeadingMonomialReport rep = leading_monomial_check(t.spec, t.r);
        CHECK(rep.rows[static_cast<std::size_t>(t.r)].symbolic_degree == pr.deg_first());
    }
}

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qpolya/guess.hpp"
#include "qpolya/lineseries.hpp"
#include "qpolya/numeric.hpp"

namespace qpolya {

struct DecideConfig {
    int max_diagonal = 8;           // escalation cap for (dx, dz) = (t, t)
    std::size_t verify_order = 60;  // minimum prefix length per round
    bool include_guess_report = false;
    int report_dx = 4, report_dz = 4;
    int report_rec_order = 3, report_rec_degree = 3;
};

/// Bounded guess searches run for a transcendence certificate; all of them
/// must come back empty (a hit would contradict the verdict and raises
/// Error("inconsistency")).
struct GuessSearchReport {
    int dx = 0, dz = 0;
    int rec_order = 0, rec_degree = 0;
    std::size_t terms_used = 0;
};

/// |q| > 1: coefficient degrees grow like the quadratic
/// (k + b*j)(n - k + (a-b)*j), so the series cannot satisfy any polynomial
/// equation.
struct DegreeGrowthCertificate {
    UniPoly<Int> degree_poly; // in j
    Int leading_coefficient;  // b*(a-b)
    AbsClass abs_class;       // Greater
};

/// |q| <= 1 without torsion: q^exponent != 1 where exponent = lcm(2, order)
/// bounds the torsion of the field's unit group.
struct NotRootOfUnityCertificate {
    unsigned long exponent = 2;
    AbsClass abs_class = AbsClass::Equal;
    std::optional<GuessSearchReport> searched;
};

struct UndecidedReport {
    int max_diagonal = 0;
    std::size_t verify_order = 0;
};

struct Verdict {
    enum class Kind { Algebraic, Transcendental, Undecided };
    Kind kind = Kind::Undecided;
    // exactly one of these is set, matching kind
    std::optional<AlgEquation> equation;
    std::optional<DegreeGrowthCertificate> degree_growth;
    std::optional<NotRootOfUnityCertificate> not_root_of_unity;
    std::optional<UndecidedReport> undecided;
};

/// Decide algebraicity of h_q for the spec. Roots of unity escalate the
/// algebraic guesser along the diagonal (t, t), t = 1..max_diagonal, with
/// prefix length max(verify_order, 2(t+1)^2); everything else gets a
/// transcendence certificate keyed off |q|. Throws on q = 0.
Verdict decide(const LineSpec& spec, const Cyclotomic& q, const DecideConfig& cfg = {});

/// The quadratic degree polynomial (k + b*j)(n - k + (a-b)*j) in j.
UniPoly<Int> degree_growth(const LineSpec& spec);

struct GrowthRow {
    long j = 0;
    double log_ratio = 0; // log|u_j| / j^2
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool exact_checked = false; // q = 2 central line: integer comparison u_j > 2^(j^2)
    bool exact_holds = false;
    long first_violation = -1;
};

/// Numeric growth diagnostics for |q| > 1 (DomainError("wrong_abs_class")
/// otherwise). For the central line at q = 2 the report additionally checks
/// u_j > 2^(j^2) exactly over the integers.
GrowthReport growth_report(const LineSpec& spec, const Cyclotomic& q, std::size_t count);

struct ZeroTestResult {
    bool identically_zero = false;
    long witness_j = 0; // when not identically zero
    Cyclotomic witness_value;
    std::size_t samples = 0;
};

/// Finite zero test for p(x, y): evaluate p(j, q^j) for j = 1..D with
/// D = (d+1)(d+2)/2, d = total degree (zero polynomial uses D = 1). Valid only
/// when q is not a root of unity of order <= d
/// (DomainError("root_of_unity_order_too_small")). A structurally nonzero p
/// whose samples all vanish raises Error("inconsistency").
ZeroTestResult zero_test_via_samples(const BiPoly<Cyclotomic>& p, const Cyclotomic& q);

struct VandermondeFactorization {
    UniPoly<Rational> det;
    Rational constant;
    unsigned long z_power = 0;
    std::map<unsigned long, unsigned long> cyclotomic_multiplicities;
};

/// Determinant of the generalized Vandermonde matrix with rows (i, j),
/// i + j <= d ordered by (j ascending, then i ascending), columns n = 1..D,
/// entries n^i z^(n*j); factored as constant * z^e * prod Phi_s^(m_s).
/// A residue that is not constant raises Error("inconsistent_factorization").
/// Guarded by a size cap (default d <= 3, DomainError("size_cap") beyond).
VandermondeFactorization vandermonde_det(int d, int max_d = 3);

/// The combined refuter polynomial p(x, y) = sum_i c_i(x) P_i(y) for a
/// candidate recurrence, where P_i clears the coefficient-ratio denominators:
///   P_i(y) = prod_{l=1}^{i*a}        (y^a     q^(n+l)     - 1)
///          * prod_{l=i*b+1}^{r*b}    (y^b     q^(k+l)     - 1)
///          * prod_{l=i*(a-b)+1}^{r*(a-b)} (y^(a-b) q^(n-k+l) - 1).
/// p(j, q^j) vanishes exactly where the recurrence window at j does.
BiPoly<Cyclotomic> build_theorem4_polynomial(const LineSpec& spec, const Cyclotomic& q,
                                             const PRecurrence& rec);

/// P_i with q left symbolic: a polynomial in (y, q) over the integers.
/// Exposed so tests can expand the product fully.
BiPoly<Int> theorem4_factor_poly(const LineSpec& spec, int r, int i);

struct LeadingMonomialRow {
    int i = 0;
    long formula_degree = 0;  // i*a^2 + (r-i)*b^2 + (r-i)*(a-b)^2
    long symbolic_degree = 0; // from the constructed factors
};

struct LeadingMonomialReport {
    std::vector<LeadingMonomialRow> rows;
    bool degrees_match = false;
    bool unique_max_at_r = false;
    long leading_y_degree = 0;         // deg_y P_r = a^2 * r
    UniPoly<Int> leading_coeff_in_q;   // leading coefficient of P_r in y
    bool leading_matches = false;      // == q^(r*a*n + r*a*(r*a+1)/2)
    bool ok = false;
};

/// Degree bookkeeping for the P_i: per-i y-degrees (computed from the factor
/// objects, leading monomials multiply without cancellation over Z[q]),
/// uniqueness of the maximum at i = r, and the exact leading monomial of P_r.
LeadingMonomialReport leading_monomial_check(const LineSpec& spec, int r);

} // namespace qpolya

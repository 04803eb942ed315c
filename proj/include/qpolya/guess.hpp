#pragma once

#include <optional>
#include <vector>

#include "qpolya/bipoly.hpp"
#include "qpolya/exec.hpp"
#include "qpolya/series_ops.hpp"

namespace qpolya {

/// Candidate algebraic equation P(x, h(x)) = 0 for a series h. Invariants:
/// z-degree >= 1, P not divisible by z, normalized (no x-content, first term
/// in lex order has coefficient 1).
struct AlgEquation {
    BiPoly<Cyclotomic> poly; // variables (x, z)
    int dx = 0, dz = 0;      // degree bounds the search ran with
    std::size_t verified_order = 0;
};

/// Candidate polynomial recurrence sum_{i=0}^{order} c_i(j) u_{j+i} = 0.
/// Invariants: c_0 != 0 and c_order != 0.
struct PRecurrence {
    int order = 0;
    int degree = 0; // max degree among the c_i
    std::vector<UniPoly<Cyclotomic>> coeffs;
};

struct VerifyOutcome {
    bool ok = false;
    std::size_t index = 0; // verified count when ok, first failing index otherwise
};

/// Bring a kernel vector into the canonical equation form: strip x-content,
/// strip z-divisibility when legal (strip_z says the series' constant term is
/// nonzero), scale the lexicographically first term to 1.
BiPoly<Cyclotomic> normalize_equation(BiPoly<Cyclotomic> p, bool strip_z);

/// Search for P with deg_x <= dx, deg_z <= dz and P(x, h) = 0 mod x^N, via an
/// exact nullspace of the truncated linear system, holding back dx + dz + 5
/// guard coefficients. Every kernel candidate is normalized and re-verified
/// against the full prefix; candidates are tried simplest-first (fewest terms,
/// then lowest total degree, then lex), so the result is deterministic.
/// Requires terms.size() >= (dx+1)(dz+1) + dx + dz + 5,
/// else DomainError("prefix_too_short"). Returns nullopt when nothing survives.
std::optional<AlgEquation> guess_algebraic(const std::vector<Cyclotomic>& terms, int dx, int dz,
                                           Exec exec = Exec::Parallel);

/// Search for a recurrence of order <= r with polynomial coefficients of
/// degree <= d, from the first (r+1)(d+1) + 5 windows, verifying survivors on
/// every remaining window. Requires terms.size() >= (r+1)(d+1) + r + 10,
/// else DomainError("too_few_terms").
std::optional<PRecurrence> guess_precurrence(const std::vector<Cyclotomic>& terms, int r, int d);

/// Evaluate P(x, h) mod x^terms.size() by truncated powering; reports the
/// verified order or the first failing coefficient index.
VerifyOutcome verify_algebraic(const BiPoly<Cyclotomic>& poly,
                               const std::vector<Cyclotomic>& terms,
                               Exec exec = Exec::Parallel);

/// Check every window sum_{i} c_i(j) u_{j+i} = 0 that fits in terms; reports
/// the window count or the first failing j. Requires at least one full window.
VerifyOutcome verify_precurrence(const PRecurrence& rec, const std::vector<Cyclotomic>& terms);

} // namespace qpolya

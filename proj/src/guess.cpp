#include "qpolya/guess.hpp"

#include <algorithm>
#include <string>

#include "qpolya/linalg.hpp"

namespace qpolya {

namespace {

std::vector<CycSeries> truncated_powers(const std::vector<Cyclotomic>& h, int max_pow,
                                        std::size_t n, Exec exec) {
    std::vector<CycSeries> pows;
    pows.reserve(static_cast<std::size_t>(max_pow) + 1);
    CycSeries one(n, Cyclotomic());
    if (n > 0) one[0] = Cyclotomic(1);
    pows.push_back(std::move(one));
    for (int j = 1; j <= max_pow; ++j)
        pows.push_back(mul_trunc(pows.back(), h, n, exec));
    return pows;
}

// Deterministic "simplest first" order on candidate polynomials.
struct CandidateKey {
    std::size_t term_count;
    long total_degree;
    std::string repr;

    bool operator<(const CandidateKey& o) const {
        if (term_count != o.term_count) return term_count < o.term_count;
        if (total_degree != o.total_degree) return total_degree < o.total_degree;
        return repr < o.repr;
    }
};

CandidateKey key_of(const BiPoly<Cyclotomic>& p) {
    return CandidateKey{p.term_count(), p.total_degree(), p.to_string("x", "z")};
}

} // namespace

BiPoly<Cyclotomic> normalize_equation(BiPoly<Cyclotomic> p, bool strip_z) {
    if (p.is_zero_poly()) return p;
    long ex = p.min_first_exp();
    if (ex > 0) p = p.shifted_down_first(ex);
    if (strip_z) {
        long ez = p.min_second_exp();
        if (ez > 0) p = p.shifted_down_second(ez);
    }
    const auto& first = *p.terms().begin();
    p = p.scaled(first.second.inverse());
    return p;
}

std::optional<AlgEquation> guess_algebraic(const std::vector<Cyclotomic>& terms, int dx, int dz,
                                           Exec exec) {
    if (dx < 0 || dz < 1)
        throw DomainError("out_of_range", "degree bounds must satisfy dx >= 0, dz >= 1");
    std::size_t need = static_cast<std::size_t>((dx + 1) * (dz + 1) + dx + dz + 5);
    std::size_t n = terms.size();
    if (n < need)
        throw DomainError("prefix_too_short",
                          "algebraic guessing at (" + std::to_string(dx) + ", " +
                              std::to_string(dz) + ") needs at least " + std::to_string(need) +
                              " terms, got " + std::to_string(n));
    std::size_t guard = static_cast<std::size_t>(dx + dz + 5);
    std::size_t eqs = n - guard;
    std::size_t cols = static_cast<std::size_t>((dx + 1) * (dz + 1));

    std::vector<CycSeries> pows = truncated_powers(terms, dz, eqs, exec);
    Matrix<Cyclotomic> m(eqs, cols);
    for (std::size_t t = 0; t < eqs; ++t)
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dz; ++j)
                if (t >= static_cast<std::size_t>(i))
                    m.at(t, static_cast<std::size_t>(i * (dz + 1) + j)) =
                        pows[static_cast<std::size_t>(j)][t - static_cast<std::size_t>(i)];

    auto kernel = nullspace(std::move(m), exec);
    if (kernel.empty()) return std::nullopt;

    bool u0_nonzero = !terms[0].is_zero_value();
    std::vector<BiPoly<Cyclotomic>> cands;
    for (const auto& v : kernel) {
        BiPoly<Cyclotomic> p;
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dz; ++j)
                p.add_term(i, j, v[static_cast<std::size_t>(i * (dz + 1) + j)]);
        p = normalize_equation(std::move(p), u0_nonzero);
        if (p.is_zero_poly() || p.deg_second() < 1 || p.min_second_exp() > 0) continue;
        cands.push_back(std::move(p));
    }
    std::sort(cands.begin(), cands.end(), [](const BiPoly<Cyclotomic>& a, const BiPoly<Cyclotomic>& b) {
        return key_of(a) < key_of(b);
    });
    for (auto& p : cands) {
        VerifyOutcome vo = verify_algebraic(p, terms, exec);
        if (vo.ok) return AlgEquation{std::move(p), dx, dz, vo.index};
    }
    return std::nullopt;
}

VerifyOutcome verify_algebraic(const BiPoly<Cyclotomic>& poly, const std::vector<Cyclotomic>& terms,
                               Exec exec) {
    std::size_t n = terms.size();
    if (n == 0) throw DomainError("prefix_too_short", "verification needs at least one term");
    long dz = poly.deg_second();
    std::vector<CycSeries> pows = truncated_powers(terms, dz < 0 ? 0 : static_cast<int>(dz), n, exec);
    CycSeries acc(n, Cyclotomic());
    for (const auto& [k, c] : poly.terms()) {
        auto i = static_cast<std::size_t>(k.first);
        const CycSeries& hp = pows[static_cast<std::size_t>(k.second)];
        for (std::size_t t = i; t < n; ++t) acc[t] += c * hp[t - i];
    }
    for (std::size_t t = 0; t < n; ++t)
        if (!acc[t].is_zero_value()) return {false, t};
    return {true, n};
}

std::optional<PRecurrence> guess_precurrence(const std::vector<Cyclotomic>& terms, int r, int d) {
    if (r < 1 || d < 0)
        throw DomainError("out_of_range", "recurrence search needs r >= 1, d >= 0");
    std::size_t need = static_cast<std::size_t>((r + 1) * (d + 1) + r + 10);
    if (terms.size() < need)
        throw DomainError("too_few_terms",
                          "recurrence guessing at (" + std::to_string(r) + ", " +
                              std::to_string(d) + ") needs at least " + std::to_string(need) +
                              " terms, got " + std::to_string(terms.size()));
    std::size_t eqs = static_cast<std::size_t>((r + 1) * (d + 1) + 5);
    std::size_t cols = static_cast<std::size_t>((r + 1) * (d + 1));

    Matrix<Cyclotomic> m(eqs, cols);
    for (std::size_t j = 0; j < eqs; ++j) {
        for (int i = 0; i <= r; ++i) {
            Cyclotomic jt(1); // j^t, t ascending
            for (int t = 0; t <= d; ++t) {
                m.at(j, static_cast<std::size_t>(i * (d + 1) + t)) = jt * terms[j + static_cast<std::size_t>(i)];
                jt *= Cyclotomic(static_cast<long>(j));
            }
        }
    }

    auto kernel = nullspace(std::move(m));
    if (kernel.empty()) return std::nullopt;

    std::vector<PRecurrence> cands;
    for (const auto& v : kernel) {
        std::vector<UniPoly<Cyclotomic>> coeffs(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i)
            for (int t = 0; t <= d; ++t)
                coeffs[static_cast<std::size_t>(i)].set_coeff(
                    static_cast<std::size_t>(t), v[static_cast<std::size_t>(i * (d + 1) + t)]);
        int ord = r;
        while (ord >= 1 && coeffs[static_cast<std::size_t>(ord)].is_zero_poly()) --ord;
        if (ord < 1) continue;                                  // no usable leading coefficient
        if (coeffs[0].is_zero_poly()) continue;                 // c_0 must be nonzero
        coeffs.resize(static_cast<std::size_t>(ord) + 1);
        // scale: first nonzero coefficient in (i, t) order becomes 1
        Cyclotomic scale;
        bool found = false;
        for (const auto& c : coeffs) {
            for (std::size_t t = 0; t < c.coeffs().size() && !found; ++t) {
                if (!c.coeff(t).is_zero_value()) {
                    scale = c.coeff(t).inverse();
                    found = true;
                }
            }
            if (found) break;
        }
        int maxdeg = 0;
        for (auto& c : coeffs) {
            c = c.scaled(scale);
            maxdeg = std::max(maxdeg, static_cast<int>(std::max(0l, c.degree())));
        }
        cands.push_back(PRecurrence{ord, maxdeg, std::move(coeffs)});
    }

    auto rec_key = [](const PRecurrence& rec) {
        std::size_t support = 0;
        std::string repr;
        for (const auto& c : rec.coeffs) {
            for (const auto& v : c.coeffs())
                if (!v.is_zero_value()) ++support;
            repr += c.to_string("x") + ";";
        }
        return std::tuple<int, std::size_t, int, std::string>(rec.order, support, rec.degree, repr);
    };
    std::sort(cands.begin(), cands.end(),
              [&](const PRecurrence& a, const PRecurrence& b) { return rec_key(a) < rec_key(b); });

    for (auto& rec : cands) {
        VerifyOutcome vo = verify_precurrence(rec, terms);
        if (vo.ok) return std::move(rec);
    }
    return std::nullopt;
}

VerifyOutcome verify_precurrence(const PRecurrence& rec, const std::vector<Cyclotomic>& terms) {
    auto r = static_cast<std::size_t>(rec.order);
    if (rec.order < 0 || rec.coeffs.size() != r + 1)
        throw DomainError("out_of_range", "malformed recurrence");
    if (terms.size() < r + 1)
        throw DomainError("too_few_terms", "verification needs at least one full window");
    std::size_t windows = terms.size() - r;
    for (std::size_t j = 0; j < windows; ++j) {
        Cyclotomic x(static_cast<long>(j));
        Cyclotomic acc;
        for (std::size_t i = 0; i <= r; ++i)
            acc += rec.coeffs[i].eval(x) * terms[j + i];
        if (!acc.is_zero_value()) return {false, j};
    }
    return {true, windows};
}

} // namespace qpolya

#include "qpolya/lineseries.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qpolya {

Admissibility check_admissible(long n, long k, long a, long b) {
    if (!(n >= k && k >= 0)) return {false, "n >= k >= 0"};
    if (!(a > b && b > 0)) return {false, "a > b > 0"};
    if (std::gcd(a, b) != 1) return {false, "gcd(a, b) = 1"};
    if (!(n - k < a - b || k < b)) return {false, "n - k < a - b or k < b"};
    return {true, ""};
}

void require_admissible(const LineSpec& spec) {
    Admissibility adm = check_admissible(spec.n, spec.k, spec.a, spec.b);
    if (!adm.admissible)
        throw DomainError("inadmissible_spec",
                          "inadmissible line spec: violated " + adm.violated);
}

namespace {

SeriesPrefix prefix_impl(const LineSpec& spec, const Cyclotomic& q, std::size_t count,
                         bool parallel) {
    require_admissible(spec);
    SeriesPrefix out;
    out.spec = spec;
    out.q = q;
    out.terms.assign(count, Cyclotomic());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long j = 0; j < static_cast<long>(count); ++j) {
        out.terms[static_cast<std::size_t>(j)] =
            q_binomial_eval(spec.n + spec.a * j, spec.k + spec.b * j, q);
    }
    return out;
}

} // namespace

SeriesPrefix prefix(const LineSpec& spec, const Cyclotomic& q, std::size_t count, Exec exec) {
    return prefix_impl(spec, q, count, exec == Exec::Parallel);
}

SeriesPrefix prefix_serial(const LineSpec& spec, const Cyclotomic& q, std::size_t count) {
    return prefix_impl(spec, q, count, false);
}

UniPoly<Int> symbolic_coefficient(const LineSpec& spec, long j) {
    require_admissible(spec);
    if (j < 0) throw DomainError("out_of_range", "coefficient index must be nonnegative");
    return q_binomial(spec.n + spec.a * j, spec.k + spec.b * j);
}

namespace {

// prod_{l=1}^{m} (q^(base+l) - 1) over Z[q]
UniPoly<Int> factor_product(long base, long m) {
    UniPoly<Int> p = UniPoly<Int>::constant(Int(1));
    for (long l = 1; l <= m; ++l) {
        UniPoly<Int> f = UniPoly<Int>::monomial(Int(1), static_cast<std::size_t>(base + l));
        f -= UniPoly<Int>::constant(Int(1));
        p *= f;
    }
    return p;
}

} // namespace

bool ratio_identity_check(const LineSpec& spec, long j) {
    require_admissible(spec);
    if (j < 0) throw DomainError("out_of_range", "coefficient index must be nonnegative");
    UniPoly<Int> u_j = symbolic_coefficient(spec, j);
    UniPoly<Int> u_next = symbolic_coefficient(spec, j + 1);
    UniPoly<Int> numer = factor_product(spec.n + spec.a * j, spec.a);
    UniPoly<Int> denom = factor_product(spec.k + spec.b * j, spec.b) *
                         factor_product(spec.n - spec.k + (spec.a - spec.b) * j, spec.a - spec.b);
    return u_next * denom == u_j * numer;
}

std::vector<LucasComponent> lucas_decomposition(const LineSpec& spec, const Cyclotomic& omega) {
    require_admissible(spec);
    auto ord = root_of_unity_order(omega);
    if (!ord)
        throw DomainError("not_root_of_unity", "Lucas decomposition at a non-root of unity");
    long s = static_cast<long>(*ord);
    std::vector<LucasComponent> out;
    out.reserve(static_cast<std::size_t>(s));
    for (long r = 0; r < s; ++r) {
        long x = spec.n + spec.a * r;
        long y = spec.k + spec.b * r;
        LucasComponent c;
        c.residue_class = static_cast<unsigned long>(r);
        c.stride = *ord;
        c.shifted_n = x / s;
        c.shifted_k = y / s;
        long x0 = x % s, y0 = y % s;
        c.scalar = (y0 > x0) ? Cyclotomic(Rational(0), omega.order())
                             : eval_at(q_binomial(x0, y0), omega);
        out.push_back(std::move(c));
    }
    return out;
}

void dump_prefix(const LineSpec& spec, unsigned long order,
                 const std::vector<Cyclotomic>& terms, std::ostream& os) {
    require_admissible(spec);
    os << "s=" << order << " n=" << spec.n << " k=" << spec.k << " a=" << spec.a
       << " b=" << spec.b << " N=" << terms.size() << "\n";
    for (const Cyclotomic& t : terms) {
        std::vector<Rational> coords = t.embedded(order).coordinates();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) os << ",";
            os << to_fraction_string(coords[i]);
        }
        os << "\n";
    }
}

void dump_prefix(const SeriesPrefix& p, std::ostream& os) {
    dump_prefix(p.spec, p.q.order(), p.terms, os);
}

void dump_prefix(const PrefixDump& p, std::ostream& os) {
    dump_prefix(p.spec, p.order, p.terms, os);
}

namespace {

[[noreturn]] void bad_format(const std::string& what) {
    throw DomainError("format_error", "malformed prefix dump: " + what);
}

long parse_long_field(const std::string& token, const std::string& key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        bad_format("expected " + key + "=<integer>");
    std::string digits = token.substr(key.size() + 1);
    std::size_t i = (digits[0] == '-') ? 1 : 0;
    if (i >= digits.size()) bad_format("expected " + key + "=<integer>");
    for (; i < digits.size(); ++i)
        if (digits[i] < '0' || digits[i] > '9') bad_format("expected " + key + "=<integer>");
    return std::stol(digits);
}

} // namespace

PrefixDump load_prefix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) bad_format("missing header line");
    std::istringstream hs(header);
    std::string ts, tn, tk, ta, tb, tN, extra;
    if (!(hs >> ts >> tn >> tk >> ta >> tb >> tN)) bad_format("short header line");
    if (hs >> extra) bad_format("trailing tokens in header");
    PrefixDump out;
    long s = parse_long_field(ts, "s");
    if (s < 1) bad_format("order must be positive");
    out.order = static_cast<unsigned long>(s);
    out.spec.n = parse_long_field(tn, "n");
    out.spec.k = parse_long_field(tk, "k");
    out.spec.a = parse_long_field(ta, "a");
    out.spec.b = parse_long_field(tb, "b");
    long count = parse_long_field(tN, "N");
    if (count < 0) bad_format("negative coefficient count");
    require_admissible(out.spec);
    unsigned long phi = euler_phi(out.order);
    out.terms.reserve(static_cast<std::size_t>(count));
    for (long j = 0; j < count; ++j) {
        std::string line;
        if (!std::getline(is, line)) bad_format("truncated after " + std::to_string(j) + " coefficients");
        std::vector<Rational> coords;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string tok = line.substr(start, comma == std::string::npos ? comma : comma - start);
            if (tok.find('/') == std::string::npos) bad_format("coordinate without denominator");
            try {
                coords.push_back(parse_fraction(tok));
            } catch (const Error&) {
                bad_format("bad coordinate '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (coords.size() != phi)
            bad_format("expected " + std::to_string(phi) + " coordinates per line");
        out.terms.push_back(Cyclotomic::from_coordinates(coords, out.order));
    }
    std::string tail;
    if (std::getline(is, tail) && !tail.empty()) bad_format("trailing data after coefficients");
    return out;
}

} // namespace qpolya

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qpolya/exec.hpp"
#include "qpolya/qcomb.hpp"

namespace qpolya {

/// Parameters (n, k, a, b) of the coefficient line: the series
///   h_q(x) = sum_j [n + a*j, k + b*j]_q x^j.
struct LineSpec {
    long n = 0, k = 0, a = 2, b = 1;

    friend bool operator==(const LineSpec& l, const LineSpec& r) {
        return l.n == r.n && l.k == r.k && l.a == r.a && l.b == r.b;
    }
};

struct Admissibility {
    bool admissible = false;
    std::string violated; // first violated condition, empty when admissible
};

/// Conditions checked in this fixed order:
///   1. n >= k >= 0
///   2. a > b > 0
///   3. gcd(a, b) = 1
///   4. n - k < a - b  or  k < b
Admissibility check_admissible(long n, long k, long a, long b);

/// Throws DomainError("inadmissible_spec") naming the first violated condition.
void require_admissible(const LineSpec& spec);

struct SeriesPrefix {
    LineSpec spec;
    Cyclotomic q;
    std::vector<Cyclotomic> terms; // terms[j] = [n+aj, k+bj]_q
};

/// First `count` coefficients of h_q. The parallel kernel splits on the
/// coefficient index; prefix_serial is the reference loop.
SeriesPrefix prefix(const LineSpec& spec, const Cyclotomic& q, std::size_t count,
                    Exec exec = Exec::Parallel);
SeriesPrefix prefix_serial(const LineSpec& spec, const Cyclotomic& q, std::size_t count);

/// The j-th coefficient as the symbolic polynomial [n+aj, k+bj]_q, degree
/// (k + b*j) * (n - k + (a-b)*j).
UniPoly<Int> symbolic_coefficient(const LineSpec& spec, long j);

/// Exact polynomial identity in Z[q] relating consecutive coefficients:
///   u_{j+1} * prod_{l=1}^{b} (q^(k+bj+l) - 1)
///           * prod_{l=1}^{a-b} (q^(n-k+(a-b)j+l) - 1)
///   == u_j * prod_{l=1}^{a} (q^(n+aj+l) - 1).
bool ratio_identity_check(const LineSpec& spec, long j);

/// One residue class of the coefficient line at a root of unity omega of
/// order `stride`: for j = l*stride + residue_class,
///   u_j = scalar * C(shifted_n + a*l, shifted_k + b*l).
struct LucasComponent {
    unsigned long residue_class = 0;
    Cyclotomic scalar;
    long shifted_n = 0, shifted_k = 0;
    unsigned long stride = 1;
};

/// Splits the line at omega into its `stride` residue classes via q-Lucas.
/// Throws DomainError("not_root_of_unity") when omega is not one.
std::vector<LucasComponent> lucas_decomposition(const LineSpec& spec, const Cyclotomic& omega);

/// Loaded form of a dumped prefix. The dump records the field order but not q
/// itself, so the loader cannot reconstruct a SeriesPrefix.
struct PrefixDump {
    LineSpec spec;
    unsigned long order = 1;
    std::vector<Cyclotomic> terms;
};

/// Text dump, bit-exact round trip:
///   line 0:  s=<order> n=<n> k=<k> a=<a> b=<b> N=<count>
///   then one line per coefficient with exactly phi(order) comma-separated
///   "num/den" residue coordinates, lowest power first.
void dump_prefix(const LineSpec& spec, unsigned long order,
                 const std::vector<Cyclotomic>& terms, std::ostream& os);
void dump_prefix(const SeriesPrefix& p, std::ostream& os);
void dump_prefix(const PrefixDump& p, std::ostream& os);

/// Strict parser for the dump format; throws DomainError("format_error") on
/// any deviation and validates the spec's admissibility.
PrefixDump load_prefix(std::istream& is);

} // namespace qpolya

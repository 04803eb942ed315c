#pragma once

#include "qpolya/cyclotomic.hpp"

namespace qpolya {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0. Throws on n < 0.
UniPoly<Int> q_int(long n);

/// Gaussian binomial [n, k]_q as an integer polynomial of degree k(n-k),
/// built by the division-free q-Pascal recurrence
///   [n, k] = [n-1, k-1] + q^k [n-1, k]
/// with a process-wide memo table (thread-safe). Throws
/// DomainError("out_of_range") unless 0 <= k <= n.
UniPoly<Int> q_binomial(long n, long k);

/// [n, k]_q evaluated at a field element without building the full symbolic
/// polynomial: roots of unity go through q_lucas_eval, q = 0 is the constant
/// term, anything else uses the telescoping product
///   prod_{l=1}^{k} (q^(n-k+l) - 1) / (q^l - 1)
/// whose partial quotients stay exact in the field.
Cyclotomic q_binomial_eval(long n, long k, const Cyclotomic& q);

/// Gaussian binomial at a root of unity omega of order s via the q-Lucas
/// factorization [x, y]_omega = C(floor(x/s), floor(y/s)) * [x mod s, y mod s]_omega
/// (zero when y mod s > x mod s). Throws DomainError("not_root_of_unity") when
/// omega is not a root of unity, DomainError("out_of_range") unless 0 <= y <= x.
Cyclotomic q_lucas_eval(long x, long y, const Cyclotomic& omega);

struct AreaDistribution {
    long x = 0, y = 0;          // endpoint: x East steps, y North steps
    UniPoly<Int> distribution;  // coefficient of q^A = number of paths with area A
};

/// Exhaustive enumeration of monotone lattice paths from the origin to (x, y),
/// tallying the area statistic: each East step contributes the number of North
/// steps already taken. Degree of the result is x*y. Guarded by a step cap
/// (default 20 total steps, DomainError("enumeration_cap") beyond it); this is
/// the brute-force oracle the q-binomial tests compare against.
AreaDistribution path_area_distribution(long x, long y, long step_cap = 20);

} // namespace qpolya

#pragma once

#include <string>

#include "qpolya/cyclotomic.hpp"

namespace qpolya {

enum class AbsClass { Less, Equal, Greater };

std::string to_string(AbsClass c);

/// Precision ceiling for the interval fallback: the QPOLYA_MAX_PRECISION
/// environment variable when set, else 4096 bits.
unsigned long default_precision_cap();

/// Classify |q| against 1 under the standard embedding zeta_s -> e^(2*pi*i/s).
///
/// Exact paths first: q * conj(q) == 1 settles Equal (the embedding is
/// injective, so this is complete), and rational q compares directly. Anything
/// else runs escalating interval evaluations: directed-rounding cos/sin with a
/// Lipschitz widening, converted to exact rational endpoints, starting at 64
/// bits and doubling. precision_cap = 0 uses default_precision_cap(). Throws
/// DomainError("undecided") if the cap is exhausted and
/// DomainError("zero_input") on q = 0.
AbsClass compare_abs_to_one(const Cyclotomic& q, unsigned long precision_cap = 0);

/// Natural log of |v| under the standard embedding, midpoint precision only
/// (diagnostics, not proofs). Throws DomainError("zero_input") on v = 0.
double log_abs_approx(const Cyclotomic& v);

} // namespace qpolya

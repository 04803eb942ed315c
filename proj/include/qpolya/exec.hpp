#pragma once

namespace qpolya {

// Kernel selection: Parallel uses the OpenMP path, Serial the reference
// implementation. Both produce identical results (exact arithmetic, disjoint
// writes); tests compare them, the benchmark times them.
enum class Exec { Serial, Parallel };

} // namespace qpolya

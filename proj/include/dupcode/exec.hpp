#pragma once

namespace dupcode {

// Execution policy for the data-parallel sweeps. Every kernel that accepts
// an Exec has a plain serial implementation (the reference) and an OpenMP
// one; both must produce identical results, which the test suite checks.
enum class Exec { Serial, Parallel };

int hardware_threads();

}  // namespace dupcode

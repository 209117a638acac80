#pragma once

namespace subsetgrad {

// Execution mode for the data-parallel kernels. Serial is the reference
// path; Parallel uses OpenMP. Both produce bit-identical results: work is
// decomposed into the same fixed chunks either way and reduced in chunk
// order.
enum class Exec { Serial, Parallel };

// Worker cap for Exec::Parallel. Honors SUBSETGRAD_THREADS when set,
// otherwise the OpenMP default. Returns 1 when built without OpenMP.
int effective_threads();

} // namespace subsetgrad

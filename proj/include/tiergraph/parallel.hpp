#pragma once

namespace tiergraph {

// Worker count used by all internally-parallel operations.
// Resolution order: explicit set_worker_count() > TIERGRAPH_THREADS env
// > OpenMP default. Outputs are bit-identical for any count.
int worker_count();
void set_worker_count(int n);  // n <= 0 restores the default

}  // namespace tiergraph

#pragma once

namespace vnum::config {

// Hard cap for the exponential graph searches. Default 24, override with
// the VNUM_MAX_VERTICES environment variable (absolute ceiling 64, the
// bitmask width).
int max_graph_vertices();

// Variable cap for full Betti tables via Hochster's formula. Default 20,
// override with VNUM_MAX_BETTI_VARS.
int max_betti_vars();

// Guard on the number of faces enumerated per simplicial complex.
long long max_complex_faces();

// Seed for the randomized property suites (VNUM_SEED).
unsigned long long default_seed();

} // namespace vnum::config

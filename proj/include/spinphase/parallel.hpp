#pragma once

namespace spinphase {

// Thread count for OpenMP regions: available cores, capped by the
// SPINPHASE_THREADS environment variable when set.  All parallel loops keep
// a fixed summation order per output element, so results do not depend on
// this value.
int thread_count();

}  // namespace spinphase

#pragma once

namespace ngd {

// Honors the NGD_THREADS environment variable (positive integer caps the
// OpenMP thread count). Call once at process start; no-op when unset.
void apply_thread_cap();

int max_threads();

}  // namespace ngd

#pragma once

namespace addiword {

// Worker cap for OpenMP kernels: ADDIWORD_THREADS when set and positive,
// otherwise the OpenMP default. Always at least 1.
int thread_count();

}  // namespace addiword

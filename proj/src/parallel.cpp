#include "addiword/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addiword {

int thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("ADDIWORD_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0 && cap < n) n = cap;
        } catch (...) {
            // ignore unparsable values
        }
    }
    return n > 0 ? n : 1;
}

}  // namespace addiword

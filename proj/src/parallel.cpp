#include "basinlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace basinlab {

int worker_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("BASINLAB_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) {
                n = std::min(n, cap);
            }
        } catch (const std::exception&) {
            // unparsable value: ignore the cap
        }
    }
    return std::max(n, 1);
}

}  // namespace basinlab

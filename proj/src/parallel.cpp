#include "positroid/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace positroid {

int thread_count() {
    static const int count = [] {
        if (const char* env = std::getenv("POSITROID_LAB_THREADS")) {
            try {
                int t = std::stoi(env);
                if (t > 0) return t;
            } catch (...) {
            }
        }
        return omp_get_max_threads();
    }();
    return count;
}

}  // namespace positroid

#pragma once

namespace positroid {

// Thread count for the OpenMP kernels: POSITROID_LAB_THREADS when set to a
// positive integer, otherwise the OpenMP default. Read once.
int thread_count();

}  // namespace positroid

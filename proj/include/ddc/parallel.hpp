#pragma once

namespace ddc {

// Number of worker threads for the O(n^2) kernels. Honors DDC_THREADS when
// it holds a positive integer, otherwise uses the runtime default.
int worker_count();

}  // namespace ddc

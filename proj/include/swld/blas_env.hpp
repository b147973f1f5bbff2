#pragma once

namespace swld {

// OpenBLAS 0.3.20 maps Sapphire Rapids onto its Cooperlake kernels, which
// return wrong eigenvectors from dsyevr. The core type is read when the
// library loads, so the only in-process fix is to set it and re-exec.
// Call first thing in main. Returns normally when no restart is needed.
void ensure_blas_kernel(char** argv);

}  // namespace swld

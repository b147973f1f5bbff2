#include <iostream>

#include "swld/blas_env.hpp"
#include "swld/cli.hpp"

int main(int argc, char** argv) {
  swld::ensure_blas_kernel(argv);
  return swld::cli::run(argc, argv, std::cout, std::cerr);
}

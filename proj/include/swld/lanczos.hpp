#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace swld {

using LinearOp = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct LanczosResult {
    std::vector<double> values;  // descending
    Eigen::MatrixXd vectors;     // columns match values
    int restarts = 0;
    int matvecs = 0;
};

struct LanczosOptions {
    double tol = 1e-8;  // Ritz residual relative to max(1, |theta|)
    int max_basis = 300;
    int max_restarts = -1;  // default 10 k
    uint64_t seed = 0x1A2C05ull;
};

// k algebraically largest eigenpairs of a symmetric operator by thick-restart
// Lanczos with full reorthogonalization.
LanczosResult lanczos_top(const LinearOp& op, int n, int k, LanczosOptions opts = {});

}  // namespace swld

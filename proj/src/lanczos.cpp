#include "swld/lanczos.hpp"

#include <algorithm>
#include <cmath>

#include "swld/errors.hpp"
#include "swld/rng.hpp"

namespace swld {

namespace {

void random_unit(Eigen::Ref<Eigen::VectorXd> v, RngStream& rng) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    v.normalize();
}

// Orthogonalize w against the first `cols` columns of V, twice.
Eigen::VectorXd orthogonalize(const Eigen::MatrixXd& V, int cols, Eigen::VectorXd& w) {
    auto basis = V.leftCols(cols);
    Eigen::VectorXd h = basis.transpose() * w;
    w.noalias() -= basis * h;
    Eigen::VectorXd h2 = basis.transpose() * w;
    w.noalias() -= basis * h2;
    return h + h2;
}

}  // namespace

LanczosResult lanczos_top(const LinearOp& op, int n, int k, LanczosOptions opts) {
    if (k < 1 || k > n) throw InvalidParameter("lanczos_top: need 1 <= k <= n");
    const int m = std::min(n, std::max(opts.max_basis, 3 * k + 20));
    const int keep = std::min(m / 2, k + std::max(k, 10));
    const int max_restarts = opts.max_restarts >= 0 ? opts.max_restarts : 10 * k;

    RngStream rng(opts.seed, static_cast<uint32_t>(n), static_cast<uint32_t>(k));
    Eigen::MatrixXd V(n, m + 1);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m, m);
    random_unit(V.col(0), rng);

    LanczosResult out;
    int start = 0;  // first column whose image has not been computed
    Eigen::VectorXd w(n);
    for (int restart = 0; restart <= max_restarts; ++restart) {
        double beta = 0;
        int size = start;
        for (int j = start; j < m; ++j) {
            op(V.col(j), w);
            ++out.matvecs;
            Eigen::VectorXd h = orthogonalize(V, j + 1, w);
            H.col(j).head(j + 1) = h;
            H.row(j).head(j + 1) = h.transpose();
            beta = w.norm();
            size = j + 1;
            double scale = std::max(1.0, H.topLeftCorner(size, size).diagonal().cwiseAbs().maxCoeff());
            if (beta < 1e-12 * scale) {
                // Invariant subspace: continue with a fresh orthogonal direction.
                if (size == n) {
                    beta = 0;
                    break;
                }
                Eigen::VectorXd r(n);
                random_unit(r, rng);
                orthogonalize(V, size, r);
                V.col(j + 1) = r.normalized();
                beta = 0;
            } else {
                V.col(j + 1) = w / beta;
            }
            if (j + 1 < m) {
                H(j + 1, j) = beta;
                H(j, j + 1) = beta;
            }
            bool check = size == m || size % 20 == 0 || size == n;
            if (!check || size < k) continue;

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(size, size));
            bool converged = true;
            for (int i = 0; i < k; ++i) {
                int c = size - 1 - i;
                double theta = es.eigenvalues()[c];
                double res = std::abs(beta * es.eigenvectors()(size - 1, c));
                if (res > opts.tol * std::max(1.0, std::abs(theta))) converged = false;
            }
            if (converged) {
                out.values.resize(k);
                Eigen::MatrixXd Z(size, k);
                for (int i = 0; i < k; ++i) {
                    out.values[i] = es.eigenvalues()[size - 1 - i];
                    Z.col(i) = es.eigenvectors().col(size - 1 - i);
                }
                out.vectors = V.leftCols(size) * Z;
                out.restarts = restart;
                return out;
            }
            if (size == m) break;
        }
        if (size == n) throw ConvergenceError("lanczos_top: full basis without convergence");

        // Thick restart on the top `keep` Ritz vectors.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(size, size));
        Eigen::MatrixXd Z = es.eigenvectors().rightCols(keep).rowwise().reverse();
        Eigen::VectorXd theta = es.eigenvalues().tail(keep).reverse();
        Eigen::MatrixXd Y = V.leftCols(size) * Z;
        Eigen::VectorXd next = V.col(size);
        V.leftCols(keep) = Y;
        V.col(keep) = next;
        H.setZero();
        for (int i = 0; i < keep; ++i) {
            H(i, i) = theta[i];
            H(keep, i) = H(i, keep) = beta * Z(size - 1, i);
        }
        start = keep;
    }
    throw ConvergenceError("lanczos_top: no convergence within the restart budget");
}

}  // namespace swld

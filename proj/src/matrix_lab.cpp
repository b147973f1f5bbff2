#include "swld/matrix_lab.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "swld/errors.hpp"
#include "swld/lanczos.hpp"
#include "swld/rng.hpp"

namespace swld {

namespace {

void check_size(int n, double p) {
    if (n < 2 || n > kMaxOrder) throw InvalidParameter("matrix order must lie in [2, 16384]");
    if (!(p > 0 && p <= 1)) throw InvalidParameter("p must lie in (0, 1]");
}

void supercritical_warning(WignerSample& s) {
    if (s.n * s.p < 4 * std::log(static_cast<double>(s.n)))
        s.warnings.push_back("np below 4 log n: outside the supercritical regime");
}

LinearOp as_op(const SymMatrix& x, double sign = 1.0) {
    return [&x, sign](const Eigen::VectorXd& v, Eigen::VectorXd& y) {
        x.multiply(v, y);
        if (sign != 1.0) y *= sign;
    };
}

// Top k eigenpairs of a dense symmetric matrix via LAPACK dsyevr.
void dense_top(const Eigen::MatrixXd& a, int k, std::vector<double>& values, Eigen::MatrixXd& vectors) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::MatrixXd work = a;
    std::vector<double> w(n);
    vectors.resize(n, k);
    std::vector<lapack_int> isuppz(2 * k);
    lapack_int found = 0;
    lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', n, work.data(), n, 0.0, 0.0, n - k + 1, n,
                                     0.0, &found, w.data(), vectors.data(), n, isuppz.data());
    if (info != 0 || found != k) throw ConvergenceError("dsyevr failed with info " + std::to_string(info));
    // LAPACK returns ascending order.
    values.assign(w.begin(), w.begin() + k);
    std::reverse(values.begin(), values.end());
    vectors = vectors.rowwise().reverse().eval();
}

std::vector<double> dense_spectrum(const Eigen::MatrixXd& a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::MatrixXd work = a;
    std::vector<double> w(n);
    lapack_int found = 0;
    double dummy = 0;
    lapack_int isuppz = 0;
    lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'A', 'U', n, work.data(), n, 0.0, 0.0, 0, 0, 0.0,
                                     &found, w.data(), &dummy, 1, &isuppz);
    if (info != 0) throw ConvergenceError("dsyevr failed with info " + std::to_string(info));
    return w;
}

}  // namespace

std::string ModelSpec::describe() const {
    if (kind == ModelKind::adjacency_centered) return "adjacency_centered";
    return "wigner(" + offdiag_law + "," + diag_law + ")";
}

WignerSample sample_wigner(int n, double p, const EntryLaw& off, const EntryLaw& diag, uint64_t seed) {
    check_size(n, p);
    if (!off.unit_variance()) throw InvalidParameter("off-diagonal law '" + off.name + "' must have unit variance");
    const double scale = 1.0 / std::sqrt(n * p);
    SymMatrix::Triplets upper;
    upper.reserve(static_cast<size_t>(p * n * (n + 1) / 2 * 1.1) + 16);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) {
            RngStream rng(seed, static_cast<uint32_t>(i), static_cast<uint32_t>(j));
            if (p < 1 && !(rng.uniform() < p)) continue;
            double g = (i == j ? diag : off).sample(rng);
            if (g != 0.0) upper.emplace_back(i, j, g * scale);
        }
    }
    WignerSample s{n, p, {ModelKind::wigner, off.name, diag.name},
                   SymMatrix::from_upper_triplets(n, upper), seed, scale, {}};
    supercritical_warning(s);
    return s;
}

WignerSample sample_adjacency_centered(int n, double p, uint64_t seed) {
    check_size(n, p);
    const double scale = 1.0 / std::sqrt(n * p);
    SymMatrix::Triplets upper;
    upper.reserve(static_cast<size_t>(p * n * (n - 1) / 2 * 1.1) + 16);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            RngStream rng(seed, static_cast<uint32_t>(i), static_cast<uint32_t>(j));
            if (rng.uniform() < p) upper.emplace_back(i, j, scale);
        }
    }
    // Edge entries are (1 - p) scale = scale + shift; non-edges equal the shift.
    WignerSample s{n, p, {ModelKind::adjacency_centered, "", ""},
                   SymMatrix::from_upper_triplets(n, upper, -p * scale), seed, scale, {}};
    supercritical_warning(s);
    return s;
}

std::vector<LocalizationPoint> localization_profile(const Eigen::VectorXd& vec, const std::vector<double>& eps_grid) {
    if (std::abs(vec.norm() - 1.0) > 1e-10) throw DomainError("localization_profile: vector must have unit norm");
    std::vector<LocalizationPoint> out;
    for (double eps : eps_grid) {
        LocalizationPoint pt{eps, 0, 0.0};
        for (Eigen::Index i = 0; i < vec.size(); ++i) {
            double a = std::abs(vec[i]);
            if (a > eps) {
                ++pt.count;
                pt.mass_sq += a * a;
            }
        }
        out.push_back(pt);
    }
    return out;
}

SpectralSummary top_eigs(const SymMatrix& x, int k) {
    const int n = x.n();
    if (k < 1 || k > n) throw InvalidParameter("top_eigs: need 1 <= k <= n");
    SpectralSummary out;
    Eigen::MatrixXd vecs;
    if (x.is_dense()) {
        dense_top(x.dense(), k, out.top_eigs, vecs);
    } else {
        LanczosResult r = lanczos_top(as_op(x), n, k);
        out.top_eigs = r.values;
        vecs = r.vectors;
    }
    out.top_vec = vecs.col(0).normalized();
    if (out.top_vec.maxCoeff() < -out.top_vec.minCoeff()) out.top_vec = -out.top_vec;

    Eigen::VectorXd y(n);
    x.multiply(out.top_vec, y);
    out.residual = (y - out.top_eigs[0] * out.top_vec).norm();
    if (out.residual > 1e-8 * std::max(1.0, std::abs(out.top_eigs[0])))
        throw ConvergenceError("top_eigs: eigen-residual above tolerance");

    out.degrees = x.offdiag_column_sq_all();
    out.max_degree = *std::max_element(out.degrees.begin(), out.degrees.end());
    for (const auto& pt : localization_profile(out.top_vec, kDefaultEpsGrid))
        out.localized_mass.emplace_back(pt.eps, std::sqrt(pt.mass_sq));
    return out;
}

SpectralSummary top_eigs(const WignerSample& sample, int k) { return top_eigs(sample.matrix, k); }

ExtremeEigs extreme_eigs(const SymMatrix& x) {
    if (x.is_dense()) {
        std::vector<double> w = dense_spectrum(x.dense());
        return {w.back(), w.front()};
    }
    double top = lanczos_top(as_op(x), x.n(), 1).values[0];
    double bottom = -lanczos_top(as_op(x, -1.0), x.n(), 1).values[0];
    return {top, bottom};
}

std::vector<double> degrees(const WignerSample& sample) { return sample.matrix.offdiag_column_sq_all(); }

std::vector<double> full_column_degrees(const WignerSample& sample) {
    std::vector<double> d = sample.matrix.offdiag_column_sq_all();
    for (int i = 0; i < sample.n; ++i) {
        double v = sample.matrix.get(i, i);
        d[i] += v * v;
    }
    return d;
}

int count_eigs_above(const SymMatrix& x, double threshold) {
    const int n = x.n();
    if (threshold == -std::numeric_limits<double>::infinity()) return n;
    if (x.is_dense()) {
        Eigen::MatrixXd a = x.dense();
        a.diagonal().array() -= threshold;
        std::vector<lapack_int> ipiv(n);
        lapack_int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'U', n, a.data(), n, ipiv.data());
        if (info >= 0) {
            // Sylvester inertia of the block-diagonal factor.
            int nonneg = 0;
            for (int i = 0; i < n;) {
                if (ipiv[i] > 0) {
                    if (a(i, i) >= 0) ++nonneg;
                    i += 1;
                } else {
                    double p = a(i, i), q = a(i, i + 1), r = a(i + 1, i + 1);
                    double det = p * r - q * q;
                    if (det < 0) {
                        nonneg += 1;
                    } else if (p + r >= 0) {
                        nonneg += 2;
                    }
                    i += 2;
                }
            }
            return nonneg;
        }
        std::vector<double> w = dense_spectrum(x.dense());
        return static_cast<int>(std::count_if(w.begin(), w.end(), [&](double v) { return v >= threshold; }));
    }
    int k = std::min(n, 8);
    while (true) {
        LanczosResult r = lanczos_top(as_op(x), n, k);
        int c = static_cast<int>(std::count_if(r.values.begin(), r.values.end(), [&](double v) { return v >= threshold; }));
        if (c < k || k == n) return c;
        k = std::min(n, 2 * k);
    }
}

int count_eigs_above(const WignerSample& sample, double threshold) { return count_eigs_above(sample.matrix, threshold); }

ResolventProbe::ResolventProbe(const SymMatrix& x) : x_(x), lambda1_(top_eigs(x, 1).top_eigs[0]) {}

ResolventProbe::ResolventProbe(const SymMatrix& x, double lambda1) : x_(x), lambda1_(lambda1) {}

double ResolventProbe::quadratic(double lambda, const Eigen::VectorXd& u, int* iterations) const {
    if (!(lambda > lambda1_ + 1e-6))
        throw SpectrumOverlap("resolvent: lambda " + std::to_string(lambda) + " not above the top eigenvalue " +
                              std::to_string(lambda1_));
    const int n = x_.n();
    // Conjugate gradient on (lambda - X) w = u, which is positive definite here.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n), r = u, d = u, q(n);
    double rr = r.squaredNorm();
    const double stop = 1e-20 * u.squaredNorm();
    int it = 0;
    for (; it < 10 * n && rr > stop; ++it) {
        x_.multiply(d, q);
        q = lambda * d - q;
        double a = rr / d.dot(q);
        w += a * d;
        r -= a * q;
        double rr_new = r.squaredNorm();
        d = r + (rr_new / rr) * d;
        rr = rr_new;
    }
    if (rr > stop) throw ConvergenceError("resolvent: conjugate gradient did not converge");
    if (iterations) *iterations = it;
    return u.dot(w);
}

double resolvent_quadratic(const WignerSample& sample, double lambda, const Eigen::VectorXd& u) {
    return ResolventProbe(sample.matrix).quadratic(lambda, u);
}

void plant_clique(SymMatrix& x, int k, double value, bool include_diagonal) {
    if (k < 1 || k > x.n()) throw InvalidParameter("plant_clique: k out of range");
    for (int j = 0; j < k; ++j)
        for (int i = 0; i <= j; ++i)
            if (i != j || include_diagonal) x.set(i, j, value);
}

void plant_vertex(SymMatrix& x, double r, double s) {
    double cur = x.offdiag_column_sq(0);
    if (!(cur > 0)) throw InvalidParameter("plant_vertex: first column is empty");
    x.scale_offdiag_column(0, std::sqrt(s / cur));
    x.set(0, 0, r);
}

void write_triplets_csv(const WignerSample& sample, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.precision(17);
    out << "n,p,model,seed\n" << sample.n << ',' << sample.p << ',' << sample.model.describe() << ',' << sample.seed
        << "\ni,j,value\n";
    for (int j = 0; j < sample.n; ++j)
        for (int i = 0; i <= j; ++i) {
            double v = sample.matrix.get(i, j);
            if (v != 0.0) out << i << ',' << j << ',' << v << '\n';
        }
}

}  // namespace swld

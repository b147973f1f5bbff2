#include "swld/sym_matrix.hpp"

#include "swld/errors.hpp"

namespace swld {

SymMatrix SymMatrix::zeros(int n) {
    if (n < 1) throw InvalidParameter("SymMatrix: n must be positive");
    SymMatrix m;
    m.n_ = n;
    if (n < kDenseLimit) {
        m.D_ = Eigen::MatrixXd::Zero(n, n);
    } else {
        m.dense_ = false;
        m.S_.resize(n, n);
    }
    return m;
}

SymMatrix SymMatrix::from_dense(Eigen::MatrixXd a) {
    if (a.rows() != a.cols()) throw InvalidParameter("SymMatrix: matrix must be square");
    SymMatrix m;
    m.n_ = static_cast<int>(a.rows());
    m.D_ = std::move(a);
    return m;
}

SymMatrix SymMatrix::from_upper_triplets(int n, const Triplets& upper, double shift) {
    SymMatrix m;
    m.n_ = n;
    if (n < kDenseLimit) {
        m.D_ = Eigen::MatrixXd::Constant(n, n, shift);
        m.D_.diagonal().setZero();
        for (const auto& t : upper) {
            double v = t.value() + (t.row() == t.col() ? 0.0 : shift);
            m.D_(t.row(), t.col()) = v;
            m.D_(t.col(), t.row()) = v;
        }
        return m;
    }
    m.dense_ = false;
    m.shift_ = shift;
    Triplets full;
    full.reserve(2 * upper.size());
    for (const auto& t : upper) {
        if (t.row() > t.col()) throw InvalidParameter("SymMatrix: expected upper-triangle triplets");
        full.push_back(t);
        if (t.row() != t.col()) full.emplace_back(t.col(), t.row(), t.value());
    }
    m.S_.resize(n, n);
    m.S_.setFromTriplets(full.begin(), full.end());
    m.S_.makeCompressed();
    return m;
}

double SymMatrix::get(int i, int j) const {
    if (dense_) return D_(i, j);
    return S_.coeff(i, j) + (i == j ? 0.0 : shift_);
}

void SymMatrix::set(int i, int j, double v) {
    if (dense_) {
        D_(i, j) = v;
        D_(j, i) = v;
        return;
    }
    double base = v - (i == j ? 0.0 : shift_);
    S_.coeffRef(i, j) = base;
    S_.coeffRef(j, i) = base;
}

void SymMatrix::scale_offdiag_column(int j, double f) {
    if (dense_) {
        for (int i = 0; i < n_; ++i)
            if (i != j) {
                D_(i, j) *= f;
                D_(j, i) = D_(i, j);
            }
        return;
    }
    if (shift_ != 0) throw InvalidParameter("scale_offdiag_column: unsupported with an off-diagonal shift");
    for (Eigen::SparseMatrix<double>::InnerIterator it(S_, j); it; ++it) {
        int i = static_cast<int>(it.row());
        if (i == j) continue;
        it.valueRef() *= f;
        S_.coeffRef(j, i) = it.value();
    }
}

void SymMatrix::multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    if (dense_) {
        y.noalias() = D_ * x;
        return;
    }
    y.noalias() = S_ * x;
    if (shift_ != 0) y.array() += shift_ * (x.sum() - x.array());
}

Eigen::MatrixXd SymMatrix::to_dense() const {
    if (dense_) return D_;
    Eigen::MatrixXd a = Eigen::MatrixXd(S_);
    if (shift_ != 0) {
        a.array() += shift_;
        a.diagonal().array() -= shift_;
    }
    return a;
}

double SymMatrix::offdiag_column_sq(int j) const {
    if (dense_) return D_.col(j).squaredNorm() - D_(j, j) * D_(j, j);
    double acc = 0;
    int nz = 0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(S_, j); it; ++it) {
        if (it.row() == j) continue;
        double v = it.value() + shift_;
        acc += v * v;
        ++nz;
    }
    return acc + static_cast<double>(n_ - 1 - nz) * shift_ * shift_;
}

std::vector<double> SymMatrix::offdiag_column_sq_all() const {
    std::vector<double> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = offdiag_column_sq(j);
    return out;
}

double SymMatrix::frobenius_sq() const {
    double acc = 0;
    for (int j = 0; j < n_; ++j) {
        double d = get(j, j);
        acc += offdiag_column_sq(j) + d * d;
    }
    return acc;
}

int SymMatrix::offdiag_nnz(int j) const {
    int nz = 0;
    for (int i = 0; i < n_; ++i)
        if (i != j && get(i, j) != 0.0) ++nz;
    return nz;
}

long long SymMatrix::upper_nnz() const {
    long long nz = 0;
    if (dense_) {
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i <= j; ++i)
                if (D_(i, j) != 0.0) ++nz;
        return nz;
    }
    if (shift_ != 0) {
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i <= j; ++i)
                if (get(i, j) != 0.0) ++nz;
        return nz;
    }
    for (int j = 0; j < n_; ++j)
        for (Eigen::SparseMatrix<double>::InnerIterator it(S_, j); it; ++it)
            if (it.row() <= j && it.value() != 0.0) ++nz;
    return nz;
}

bool SymMatrix::is_symmetric() const {
    if (dense_) {
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (D_(i, j) != D_(j, i)) return false;
        return true;
    }
    for (int j = 0; j < n_; ++j)
        for (Eigen::SparseMatrix<double>::InnerIterator it(S_, j); it; ++it)
            if (S_.coeff(j, it.row()) != it.value()) return false;
    return true;
}

}  // namespace swld

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

namespace swld {

// Matrices of order below this are stored densely.
inline constexpr int kDenseLimit = 4096;

// Real symmetric matrix. Sparse storage may carry a constant added to every
// off-diagonal entry, which keeps a centered adjacency matrix sparse:
// X_ij = S_ij + shift for i != j, X_ii = S_ii.
class SymMatrix {
public:
    using Triplets = std::vector<Eigen::Triplet<double>>;

    static SymMatrix zeros(int n);
    static SymMatrix from_dense(Eigen::MatrixXd a);
    // Triplets hold the upper triangle (i <= j) only.
    static SymMatrix from_upper_triplets(int n, const Triplets& upper, double offdiag_shift = 0.0);

    int n() const { return n_; }
    bool is_dense() const { return dense_; }
    double offdiag_shift() const { return shift_; }

    double get(int i, int j) const;
    // Sets X_ij and X_ji.
    void set(int i, int j, double v);
    // Multiplies the off-diagonal entries of column j (and row j) by f.
    void scale_offdiag_column(int j, double f);

    void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    Eigen::MatrixXd to_dense() const;
    const Eigen::MatrixXd& dense() const { return D_; }
    const Eigen::SparseMatrix<double>& sparse() const { return S_; }

    double frobenius_sq() const;
    // sum_{i != j} X_ij^2
    double offdiag_column_sq(int j) const;
    std::vector<double> offdiag_column_sq_all() const;
    // Number of nonzero off-diagonal entries in column j.
    int offdiag_nnz(int j) const;
    // Nonzero entries on or above the diagonal.
    long long upper_nnz() const;
    bool is_symmetric() const;

private:
    int n_ = 0;
    bool dense_ = true;
    double shift_ = 0;
    Eigen::MatrixXd D_;
    Eigen::SparseMatrix<double> S_;
};

}  // namespace swld

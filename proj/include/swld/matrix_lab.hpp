#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "swld/entry_laws.hpp"
#include "swld/sym_matrix.hpp"

namespace swld {

enum class ModelKind { wigner, adjacency_centered };

struct ModelSpec {
    ModelKind kind = ModelKind::wigner;
    std::string offdiag_law;  // empty for adjacency
    std::string diag_law;
    std::string describe() const;
};

struct WignerSample {
    int n;
    double p;
    ModelSpec model;
    SymMatrix matrix;
    uint64_t seed;
    double scaling;  // 1/sqrt(np)
    std::vector<std::string> warnings;
};

inline constexpr int kMaxOrder = 16384;

// X = (G o Xi)/sqrt(np) with diagonal entries drawn from diag_law.
WignerSample sample_wigner(int n, double p, const EntryLaw& offdiag_law, const EntryLaw& diag_law, uint64_t seed);
// (Adj - E Adj)/sqrt(np) for an Erdos-Renyi graph without loops.
WignerSample sample_adjacency_centered(int n, double p, uint64_t seed);

struct LocalizationPoint {
    double eps;
    int count;       // entries with |v_i| > eps
    double mass_sq;  // their squared l2 mass
};

inline const std::vector<double> kDefaultEpsGrid{0.0, 0.05, 0.1, 0.2, 0.3, 0.5};

std::vector<LocalizationPoint> localization_profile(const Eigen::VectorXd& vec, const std::vector<double>& eps_grid);

struct SpectralSummary {
    std::vector<double> top_eigs;  // descending
    Eigen::VectorXd top_vec;
    std::vector<double> degrees;
    double max_degree;
    std::vector<std::pair<double, double>> localized_mass;  // eps -> |v^eps|
    double residual;
};

SpectralSummary top_eigs(const WignerSample& sample, int k);
SpectralSummary top_eigs(const SymMatrix& x, int k);

struct ExtremeEigs {
    double max;
    double min;
};
ExtremeEigs extreme_eigs(const SymMatrix& x);

// Squared column norms with the diagonal entry zeroed.
std::vector<double> degrees(const WignerSample& sample);
// Squared column norms including the diagonal.
std::vector<double> full_column_degrees(const WignerSample& sample);

int count_eigs_above(const SymMatrix& x, double threshold);
int count_eigs_above(const WignerSample& sample, double threshold);

// <u, (lambda - X)^{-1} u> for lambda above the spectrum. The top eigenvalue
// is computed once per probe.
class ResolventProbe {
public:
    explicit ResolventProbe(const SymMatrix& x);
    ResolventProbe(const SymMatrix& x, double lambda1);
    double lambda1() const { return lambda1_; }
    double quadratic(double lambda, const Eigen::VectorXd& u, int* iterations = nullptr) const;

private:
    const SymMatrix& x_;
    double lambda1_;
};

double resolvent_quadratic(const WignerSample& sample, double lambda, const Eigen::VectorXd& u);

// Clique block: off-diagonal entries of the leading k x k block set to
// `value`; the diagonal too when include_diagonal.
void plant_clique(SymMatrix& x, int k, double value, bool include_diagonal);
// X_11 = r and off-diagonal first column rescaled to squared norm s.
void plant_vertex(SymMatrix& x, double r, double s);

// Triplet CSV of the upper triangle with a `n,p,model,seed` header.
void write_triplets_csv(const WignerSample& sample, const std::string& path);

}  // namespace swld

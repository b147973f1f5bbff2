#pragma once

namespace swld {

// Spectral location strictly above the bulk edge 2.
class EdgePoint {
public:
    explicit EdgePoint(double lambda);
    double value() const { return lambda_; }

private:
    double lambda_;
};

enum class PlantKind { clique, vertex };

struct BbpPrediction {
    PlantKind kind;
    double y = 0;  // clique strength
    double r = 0;  // vertex weight
    double s = 0;  // vertex degree
    double predicted_location;
    double root_location;  // bracketed root of the secular function
};

// Values of lambda at or below this are rejected by m_of and friends.
inline constexpr double kEdgeGuard = 2.0 + 1e-12;

double m_of(double lambda);
double m_inverse(double y);
double lambda_over_m(double lambda);
double degree_to_lambda(double d);

BbpPrediction clique_secular_root(double y);
// Largest root of 1 - s m(z)/(z - r).
BbpPrediction vertex_secular_root(double r, double s);

}  // namespace swld

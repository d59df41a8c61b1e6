#pragma once

#include <optional>
#include <vector>

#include "nrpi/matcore.hpp"

namespace nrpi {

// Default angular resolution: half-degree steps.
constexpr int kDefaultGrid = 720;

// The uniform angle grid over (-pi, pi]: theta_i = -pi + 2*pi*(i+1)/m.
// Contains pi always and 0 whenever m is even.
std::vector<double> grid_thetas(int m);

// Full spectra of Re(e^{-i theta} A) across the angle grid. Row i holds the
// descending eigenvalues at thetas[i]; lambda_1 rows sample the support
// function of W(A).
struct SupportSweep {
    std::vector<double> thetas;
    std::vector<std::vector<double>> eigs;
    int matrix_dim = 0;
};

// Ordered samples of the numerical-range boundary: point i is the support
// point <A x, x> in direction e^{i thetas[i]}.
struct BoundaryCurve {
    std::vector<double> thetas;
    ComplexVector points;
    bool closed = true;
};

// Radii of detected origin-centered circular components of the Kippenhahn
// curve, ascending (0 is reported when 0 persists as a root).
struct CircleSet {
    std::vector<double> radii;
};

// Rank-k numerical range as a half-plane intersection.
struct RankKRange {
    enum class Verdict { EmptySet, SinglePoint, Polygon };
    int k = 0;
    Verdict verdict = Verdict::EmptySet;
    Complex point;           // set when SinglePoint
    ComplexVector vertices;  // set when Polygon; convex position, counterclockwise
};

SupportSweep sweep(const ComplexMatrix& a, int m = kDefaultGrid);

BoundaryCurve boundary(const ComplexMatrix& a, int m = kDefaultGrid);

// Max of the support function over the grid, refined by golden-section
// search around the grid argmax.
double numerical_radius(const ComplexMatrix& a, int m = kDefaultGrid);

// Characteristic polynomial of Re(e^{-i theta} A), monic, ascending coeffs.
RealPolynomial kippenhahn_coeffs(const ComplexMatrix& a, double theta);

// Circular components of the Kippenhahn curve: candidate radii are the
// moduli of the theta = 0 eigenvalues; a radius r is accepted iff the
// polynomial values P_{A,theta}(+-r) stay below tol*(1+||A||)^n across the
// grid. The verdict is re-checked at grid 2m; disagreement raises
// GridUnstableError.
CircleSet detect_circles(const ComplexMatrix& a, int m = kDefaultGrid, double tol = 1e-8);

// Radius of W(A) when it is an origin-centered disk: requires the lambda_1
// row of the sweep to be constant within tol at both m and 2m (else
// GridUnstableError on disagreement); returns the grid mean, or nullopt.
std::optional<double> circular_disk_test(const ComplexMatrix& a, int m = kDefaultGrid,
                                         double tol = kDefaultTol);

// Rank-k numerical range: intersection over the grid of the half-planes
// Re(e^{-i theta} z) <= lambda_k(theta). (The lower bounds of the defining
// sandwich are the theta+pi instances of the upper bounds, so the full-circle
// grid of upper half-planes captures both.) Classification EmptySet /
// SinglePoint / Polygon is validated at grid 2m.
RankKRange rank_k_range(const ComplexMatrix& a, int k, int m = kDefaultGrid,
                        double tol = kDefaultTol);

}  // namespace nrpi

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nrpi/kipp.hpp"
#include "nrpi/pisom.hpp"

namespace nrpi {

// Eigenvalue-collision threshold: the support-function spectrum is declared
// degenerate when an adjacent gap dips below this after refinement.
constexpr double kGapTol = 1e-7;

// Smallest adjacent-eigenvalue gap of Re(e^{-i theta} A) over all theta,
// refined by golden-section search at each local minimum of the sweep.
struct GenericityReport {
    bool generic = true;
    double min_gap = 0.0;
    std::optional<double> witness_theta;  // argmin angle
    std::optional<int> witness_level;     // 1-based j of the closest pair (lambda_j, lambda_j+1)
};

// A straight segment of the numerical-range boundary: at direction phi the
// top eigenvalue of Re(e^{-i phi} A) is repeated and the compression of
// Im(e^{-i phi} A) onto its eigenspace has distinct extreme eigenvalues
// mu_hi > mu_lo; the segment is e^{i phi} (support_value + i [mu_lo, mu_hi]).
struct FlatPortion {
    double direction = 0.0;
    std::array<Complex, 2> endpoints;  // high then low
    double support_value = 0.0;
};

// Shape of W(A) for a triangular 3x3 input, per the elliptical-disk test
// lambda_star = (c|x|^2 + b|y|^2 + a|z|^2 - x conj(y) z) / (|x|^2+|y|^2+|z|^2):
// an elliptical disk exactly when lambda_star hits a diagonal entry, the foci
// being the other two. LineSegment is reserved for vanishing off-diagonal
// parts, which are rejected as ReducibleInputError instead of classified.
struct Classification3x3 {
    enum class Verdict { EllipticalDisk, Ovular, FlatPortion, LineSegment };
    Verdict verdict = Verdict::Ovular;
    Complex lambda_star;
    std::array<Complex, 2> foci;  // set when EllipticalDisk
};

// Commutant probe: A is unitarily reducible iff some non-scalar Hermitian X
// commutes with A (and then automatically with A*). commutant_dim is the
// real dimension of the solution space (>= 1, the identity); the projector,
// when present, is a spectral projector of such an X and witnesses a
// reducing subspace.
struct ReducibilityReport {
    bool reducible = false;
    int commutant_dim = 1;
    std::optional<ComplexMatrix> projector;
};

// The closed-form circularity test for the 5x5 nilpotent rank-three family:
// W(A) is a circular disk iff b*c*s*t = 0, of radius
// (1/2) sqrt((3 + sqrt(5 - 4(b^2 + c^2 t^2))) / 2).
struct CircularityCriterion5 {
    bool circular = false;
    std::optional<double> radius;
};

GenericityReport genericity(const ComplexMatrix& a, int m = kDefaultGrid,
                            double gap_tol = kGapTol);

std::vector<FlatPortion> flat_portions(const ComplexMatrix& a, int m = kDefaultGrid,
                                       double tol = kGapTol);

Classification3x3 classify_3x3(const ComplexMatrix& a, double tol = kDefaultTol);

CircularityCriterion5 circularity_criterion_5x5(const NilpotentDim5& spec);

ReducibilityReport reducibility(const ComplexMatrix& a, double tol = 1e-8);

struct AnalyzeOptions {
    int grid = kDefaultGrid;
    double tol = kDefaultTol;
    double gap_tol = kGapTol;
    std::vector<int> ks;  // rank-k ranges to include in the report
};

// Aggregate of every verdict the toolkit can produce for one matrix.
// The spec-aware overload adds the family-specific fields: the 5x5
// circularity criterion and the printed irreducibility statement for the
// nilpotent rank-three family (recorded alongside the computed commutant
// verdict; the two differ at the corners (b,t) = (1,0) and (0,1)).
struct RangeReport {
    int dim = 0;
    bool partial_isometry = false;
    GenericityReport genericity;
    std::optional<double> disk_radius;
    CircleSet circles;
    std::vector<FlatPortion> flats;
    ReducibilityReport reducibility;
    std::optional<Classification3x3> shape_3x3;
    std::optional<CircularityCriterion5> criterion_5x5;
    std::optional<bool> statement_irreducible;
    std::vector<RankKRange> rank_ranges;
};

RangeReport analyze(const ComplexMatrix& a, const AnalyzeOptions& opts = {});
RangeReport analyze(const PisomSpec& spec, const AnalyzeOptions& opts = {});

}  // namespace nrpi

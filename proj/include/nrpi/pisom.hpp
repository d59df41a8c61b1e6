#pragma once

#include <cstdint>
#include <variant>

#include "nrpi/matcore.hpp"

namespace nrpi {

// Canonical families of partial isometries. Each spec type validates its
// parameters on construction and stores the derived quantities (c, s, the
// exceptional root) so that every downstream formula reads the same values.

enum class ExcSign { plus, minus };

// 3x3 rank-two family, parameterized by the two nonzero eigenvalues:
//   [ 0   sqrt(1-|l1|^2)   -conj(l1)*sqrt(1-|l2|^2) ]
//   [ 0   l1                sqrt(1-|l1|^2)*sqrt(1-|l2|^2) ]
//   [ 0   0                 l2 ]
struct Rank2Dim3 {
    Rank2Dim3(Complex lambda1, Complex lambda2);
    Complex lambda1;
    Complex lambda2;
};

// 4x4 nilpotent rank-two family: (1,3)=1, (2,4)=b, (3,4)=c, c = sqrt(1-b^2).
struct NilpotentDim4 {
    explicit NilpotentDim4(double b);
    double b;
    double c;  // derived, sqrt(1 - b^2)
};

// 5x5 nilpotent rank-three family:
// (1,3)=1, (2,4)=b, (2,5)=t*c, (3,4)=c, (3,5)=-t*b, (4,5)=s,
// with c = sqrt(1-b^2), s = sqrt(1-t^2).
struct NilpotentDim5 {
    NilpotentDim5(double b, double t);
    double b;
    double t;
    double c;  // derived, sqrt(1 - b^2)
    double s;  // derived, sqrt(1 - t^2)
};

// The two non-generic 5x5 matrices (up to rotation e^{i*phi}): the
// NilpotentDim5 family evaluated at c = c_plus or c = c_minus with
// t = 1/sqrt(2 -+ c), times a global phase factor.
struct ExceptionalDim5 {
    ExceptionalDim5(ExcSign sign, double phi);
    ExcSign sign;
    double phi;
};

// Generic block form [[0, B], [0, C]] with square blocks of equal size m
// (so the matrix is 2m x 2m and the kernel has dimension m). Valid when
// B*B + C*C = I, i.e. the columns of [B; C] are orthonormal.
struct RawBlocks {
    RawBlocks(ComplexMatrix b_block, ComplexMatrix c_block);
    ComplexMatrix b_block;
    ComplexMatrix c_block;
};

using PisomSpec = std::variant<Rank2Dim3, NilpotentDim4, NilpotentDim5, ExceptionalDim5, RawBlocks>;

// Roots of the two cubics that single out the exceptional matrices:
// c_plus solves c^3 - 2c^2 - c + 1 = 0, c_minus solves c^3 + 2c^2 - c - 1 = 0,
// both computed from the closed trigonometric forms and polished by one
// Newton step. t_pm = 1/sqrt(2 -+ c_pm).
struct ExceptionalConstants {
    double alpha;    // (1/3) * arctan(3*sqrt(3))
    double c_plus;   // 0.55495...
    double c_minus;  // 0.80193...
    double t_plus;
    double t_minus;
};

ExceptionalConstants exceptional_constants();

// Dimension of the matrix a spec builds.
int spec_dim(const PisomSpec& spec);

// Materialize the spec as a matrix. Re-checks the invariants and throws
// InvalidSpecError if they fail (e.g. after direct member mutation).
ComplexMatrix build(const PisomSpec& spec);

// The ExceptionalDim5 matrices are members of the NilpotentDim5 family
// (up to the phase factor); this returns the underlying (b, t) spec.
NilpotentDim5 exceptional_as_dim5(const ExceptionalDim5& spec);

// True iff ||A*A'*A - A||_F <= tol * (1 + ||A||_F), the defining identity
// A A* A = A of a partial isometry.
bool validate_partial_isometry(const ComplexMatrix& a, double tol = kDefaultTol);

// Spanning vector of ker Im(A) for the 5x5 nilpotent family:
// xi = [t, -s, 0, t*c, -b]^T.
ComplexVector kernel_vector_xi(const NilpotentDim5& spec);

// Seeded pseudo-random partial isometry U P V* of the given rank, where
// U, V are Gram-Schmidt orthonormalizations of Gaussian matrices drawn
// from a splitmix64 stream and P is the 0/1 diagonal rank projection.
// Deterministic per seed. Requires 1 <= rank <= n <= 12 (rank = n gives
// a unitary).
ComplexMatrix random_partial_isometry(int n, int rank, std::uint64_t seed);

namespace detail {

// splitmix64: the 64-bit mixing generator, fixed here so that random
// fixtures are reproducible across implementations.
struct SplitMix64 {
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t state;
    std::uint64_t next();
    double uniform01();        // (0, 1]
    double gaussian();         // standard normal via Box-Muller (one of a pair)
  private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

ComplexMatrix random_unitary(int n, SplitMix64& rng);

}  // namespace detail

}  // namespace nrpi

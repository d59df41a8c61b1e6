#include "nrpi/pisom.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nrpi {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

double sqrt_complement(double x) {
    // sqrt(1 - x^2) without cancellation for x near 1.
    return std::sqrt((1.0 - x) * (1.0 + x));
}

}  // namespace

Rank2Dim3::Rank2Dim3(Complex l1, Complex l2) : lambda1(l1), lambda2(l2) {
    if (!(std::abs(l1) < 1.0) || !(std::abs(l2) < 1.0))
        throw InvalidSpecError("Rank2Dim3: eigenvalues must satisfy |lambda1| < 1 and |lambda2| < 1");
}

NilpotentDim4::NilpotentDim4(double b_in) : b(b_in), c(0.0) {
    if (!in_unit_interval(b))
        throw InvalidSpecError("NilpotentDim4: b must lie in [0, 1]");
    c = sqrt_complement(b);
}

NilpotentDim5::NilpotentDim5(double b_in, double t_in) : b(b_in), t(t_in), c(0.0), s(0.0) {
    if (!in_unit_interval(b))
        throw InvalidSpecError("NilpotentDim5: b must lie in [0, 1]");
    if (!in_unit_interval(t))
        throw InvalidSpecError("NilpotentDim5: t must lie in [0, 1]");
    c = sqrt_complement(b);
    s = sqrt_complement(t);
}

ExceptionalDim5::ExceptionalDim5(ExcSign sign_in, double phi_in) : sign(sign_in), phi(phi_in) {
    if (!std::isfinite(phi))
        throw InvalidSpecError("ExceptionalDim5: phi must be finite");
    if (phi < 0.0 || phi > 2.0 * std::numbers::pi) {
        phi = std::fmod(phi, 2.0 * std::numbers::pi);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    }
}

RawBlocks::RawBlocks(ComplexMatrix b_in, ComplexMatrix c_in)
    : b_block(std::move(b_in)), c_block(std::move(c_in)) {
    if (b_block.dim() != c_block.dim())
        throw InvalidSpecError("RawBlocks: B and C must be square blocks of equal size");
    const int m = b_block.dim();
    ComplexMatrix gram = b_block.adjoint() * b_block + c_block.adjoint() * c_block;
    gram -= ComplexMatrix::identity(m);
    const double scale = 1.0 + b_block.frobenius_norm() + c_block.frobenius_norm();
    if (gram.frobenius_norm() > kDefaultTol * scale)
        throw InvalidSpecError("RawBlocks: B*B + C*C must equal the identity");
}

ExceptionalConstants exceptional_constants() {
    const double alpha = std::atan(3.0 * std::sqrt(3.0)) / 3.0;
    const double sqrt7 = std::sqrt(7.0);
    const double third_pi = std::numbers::pi / 3.0;

    double cp = (2.0 / 3.0) * (1.0 - sqrt7 * std::cos(alpha + third_pi));
    double cm = -(2.0 / 3.0) * (1.0 - sqrt7 * std::cos(alpha - third_pi));

    // One Newton polish on the defining cubics pins the roots to full
    // double precision (the trigonometric forms carry a few ulps of noise).
    cp -= (((cp - 2.0) * cp - 1.0) * cp + 1.0) / ((3.0 * cp - 4.0) * cp - 1.0);
    cm -= (((cm + 2.0) * cm - 1.0) * cm - 1.0) / ((3.0 * cm + 4.0) * cm - 1.0);

    return ExceptionalConstants{
        alpha,
        cp,
        cm,
        1.0 / std::sqrt(2.0 - cp),
        1.0 / std::sqrt(2.0 + cm),
    };
}

NilpotentDim5 exceptional_as_dim5(const ExceptionalDim5& spec) {
    const ExceptionalConstants k = exceptional_constants();
    const double c = (spec.sign == ExcSign::plus) ? k.c_plus : k.c_minus;
    const double t = (spec.sign == ExcSign::plus) ? k.t_plus : k.t_minus;
    return NilpotentDim5(sqrt_complement(c), t);
}

int spec_dim(const PisomSpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rank2Dim3>) return 3;
            if constexpr (std::is_same_v<T, NilpotentDim4>) return 4;
            if constexpr (std::is_same_v<T, NilpotentDim5>) return 5;
            if constexpr (std::is_same_v<T, ExceptionalDim5>) return 5;
            if constexpr (std::is_same_v<T, RawBlocks>) return 2 * s.b_block.dim();
        },
        spec);
}

namespace {

ComplexMatrix build_rank2_dim3(const Rank2Dim3& s) {
    if (!(std::abs(s.lambda1) < 1.0) || !(std::abs(s.lambda2) < 1.0))
        throw InvalidSpecError("Rank2Dim3: eigenvalues must satisfy |lambda1| < 1 and |lambda2| < 1");
    const double d1 = std::sqrt(1.0 - std::norm(s.lambda1));
    const double d2 = std::sqrt(1.0 - std::norm(s.lambda2));
    ComplexMatrix a(3);
    a(0, 1) = d1;
    a(0, 2) = -std::conj(s.lambda1) * d2;
    a(1, 1) = s.lambda1;
    a(1, 2) = d1 * d2;
    a(2, 2) = s.lambda2;
    return a;
}

ComplexMatrix build_nilpotent_dim4(const NilpotentDim4& s) {
    if (!in_unit_interval(s.b) || std::abs(s.b * s.b + s.c * s.c - 1.0) > 1e-12)
        throw InvalidSpecError("NilpotentDim4: b must lie in [0, 1] with c = sqrt(1 - b^2)");
    ComplexMatrix a(4);
    a(0, 2) = 1.0;
    a(1, 3) = s.b;
    a(2, 3) = s.c;
    return a;
}

ComplexMatrix build_nilpotent_dim5(const NilpotentDim5& s) {
    if (!in_unit_interval(s.b) || !in_unit_interval(s.t) ||
        std::abs(s.b * s.b + s.c * s.c - 1.0) > 1e-12 ||
        std::abs(s.t * s.t + s.s * s.s - 1.0) > 1e-12 || s.c < 0.0 || s.s < 0.0)
        throw InvalidSpecError(
            "NilpotentDim5: requires b, t in [0, 1] with c = sqrt(1 - b^2), s = sqrt(1 - t^2)");
    ComplexMatrix a(5);
    a(0, 2) = 1.0;
    a(1, 3) = s.b;
    a(1, 4) = s.t * s.c;
    a(2, 3) = s.c;
    a(2, 4) = -s.t * s.b;
    a(3, 4) = s.s;
    return a;
}

ComplexMatrix build_exceptional_dim5(const ExceptionalDim5& s) {
    if (!std::isfinite(s.phi))
        throw InvalidSpecError("ExceptionalDim5: phi must be finite");
    ComplexMatrix a = build_nilpotent_dim5(exceptional_as_dim5(s));
    a *= std::polar(1.0, s.phi);
    return a;
}

ComplexMatrix build_raw_blocks(const RawBlocks& s) {
    const int m = s.b_block.dim();
    if (m != s.c_block.dim())
        throw InvalidSpecError("RawBlocks: B and C must be square blocks of equal size");
    ComplexMatrix a(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            a(i, m + j) = s.b_block(i, j);
            a(m + i, m + j) = s.c_block(i, j);
        }
    if (!validate_partial_isometry(a))
        throw InvalidSpecError("RawBlocks: B*B + C*C must equal the identity");
    return a;
}

}  // namespace

ComplexMatrix build(const PisomSpec& spec) {
    return std::visit(
        [](const auto& s) -> ComplexMatrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rank2Dim3>) return build_rank2_dim3(s);
            if constexpr (std::is_same_v<T, NilpotentDim4>) return build_nilpotent_dim4(s);
            if constexpr (std::is_same_v<T, NilpotentDim5>) return build_nilpotent_dim5(s);
            if constexpr (std::is_same_v<T, ExceptionalDim5>) return build_exceptional_dim5(s);
            if constexpr (std::is_same_v<T, RawBlocks>) return build_raw_blocks(s);
        },
        spec);
}

bool validate_partial_isometry(const ComplexMatrix& a, double tol) {
    const ComplexMatrix residual = a * a.adjoint() * a - a;
    return residual.frobenius_norm() <= tol * (1.0 + a.frobenius_norm());
}

ComplexVector kernel_vector_xi(const NilpotentDim5& spec) {
    return {Complex(spec.t), Complex(-spec.s), Complex(0.0), Complex(spec.t * spec.c),
            Complex(-spec.b)};
}

namespace detail {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    // 53 random bits mapped to (0, 1]; never 0, so safe under log().
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double w = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(w);
    have_spare_ = true;
    return r * std::cos(w);
}

ComplexMatrix random_unitary(int n, SplitMix64& rng) {
    ComplexMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());

    // Modified Gram-Schmidt on the columns.
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            Complex proj = 0.0;
            for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
        norm = std::sqrt(norm);
        if (norm < 1e-8)
            throw Error("random_unitary: degenerate Gaussian draw");  // practically unreachable
        for (int i = 0; i < n; ++i) g(i, j) /= norm;
    }
    return g;
}

}  // namespace detail

ComplexMatrix random_partial_isometry(int n, int rank, std::uint64_t seed) {
    if (n < 1 || n > 12 || rank < 1 || rank > n)
        throw InvalidRankError("random_partial_isometry: requires 1 <= rank <= n <= 12");

    detail::SplitMix64 rng{seed};
    const ComplexMatrix u = detail::random_unitary(n, rng);
    const ComplexMatrix v = detail::random_unitary(n, rng);

    // U P V* with P the rank-projection: zero out the trailing columns of U
    // before multiplying.
    ComplexMatrix up = u;
    for (int j = rank; j < n; ++j)
        for (int i = 0; i < n; ++i) up(i, j) = 0.0;
    return up * v.adjoint();
}

}  // namespace nrpi

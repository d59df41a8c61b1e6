#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "nrpi/pisom.hpp"

using namespace nrpi;

namespace {

double entry_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

}  // namespace

TEST_SUITE("pisom") {

TEST_CASE("exceptional constants match the frozen roots") {
    const ExceptionalConstants k = exceptional_constants();
    CHECK(k.alpha == doctest::Approx(0.46022357448280993).epsilon(1e-14));
    CHECK(k.c_plus == doctest::Approx(0.55495813208737121).epsilon(1e-14));
    CHECK(k.c_minus == doctest::Approx(0.80193773580483829).epsilon(1e-14));
    CHECK(k.t_plus == doctest::Approx(0.83187827933544212).epsilon(1e-14));
    CHECK(k.t_minus == doctest::Approx(0.59740762289429272).epsilon(1e-14));

    // the defining cubics
    CHECK(std::abs(((k.c_plus - 2) * k.c_plus - 1) * k.c_plus + 1) <= 1e-14);
    CHECK(std::abs(((k.c_minus + 2) * k.c_minus - 1) * k.c_minus - 1) <= 1e-14);

    // t = 1/sqrt(2 -+ c), and the algebraic identity b = sqrt(1 - c^2) = t
    CHECK(k.t_plus == doctest::Approx(1.0 / std::sqrt(2.0 - k.c_plus)).epsilon(1e-14));
    CHECK(k.t_minus == doctest::Approx(1.0 / std::sqrt(2.0 + k.c_minus)).epsilon(1e-14));
    CHECK(std::sqrt(1.0 - k.c_plus * k.c_plus) == doctest::Approx(k.t_plus).epsilon(1e-12));
    CHECK(std::sqrt(1.0 - k.c_minus * k.c_minus) == doctest::Approx(k.t_minus).epsilon(1e-12));
}

TEST_CASE("rank-two 3x3 builder places the stated entries") {
    const Complex l1(0.3, 0.2), l2(-0.5, 0.1);
    const double d1 = std::sqrt(1.0 - std::norm(l1));
    const double d2 = std::sqrt(1.0 - std::norm(l2));
    const ComplexMatrix a = build(Rank2Dim3(l1, l2));

    REQUIRE(a.dim() == 3);
    for (int i = 0; i < 3; ++i) CHECK(a(i, 0) == Complex(0, 0));
    CHECK(std::abs(a(0, 1) - d1) < 1e-15);
    CHECK(std::abs(a(0, 2) + std::conj(l1) * d2) < 1e-15);
    CHECK(a(1, 1) == l1);
    CHECK(std::abs(a(1, 2) - d1 * d2) < 1e-15);
    CHECK(a(2, 1) == Complex(0, 0));
    CHECK(a(2, 2) == l2);

    CHECK(validate_partial_isometry(a));
    CHECK(std::abs(a.trace() - (l1 + l2)) < 1e-15);  // eigenvalues 0, l1, l2
}

TEST_CASE("4x4 nilpotent builder") {
    const NilpotentDim4 s(0.3);
    CHECK(s.c == doctest::Approx(std::sqrt(0.91)).epsilon(1e-15));
    const ComplexMatrix a = build(s);
    REQUIRE(a.dim() == 4);
    CHECK(a(0, 2) == Complex(1, 0));
    CHECK(std::abs(a(1, 3) - s.b) < 1e-15);
    CHECK(std::abs(a(2, 3) - s.c) < 1e-15);
    CHECK(validate_partial_isometry(a));
    CHECK((a * a * a).frobenius_norm() == 0.0);  // nilpotent of order 3
}

TEST_CASE("5x5 nilpotent builder and its kernel vector") {
    const NilpotentDim5 s(0.3, 0.7);
    const ComplexMatrix a = build(s);
    REQUIRE(a.dim() == 5);
    CHECK(a(0, 2) == Complex(1, 0));
    CHECK(std::abs(a(1, 3) - s.b) < 1e-15);
    CHECK(std::abs(a(1, 4) - s.t * s.c) < 1e-15);
    CHECK(std::abs(a(2, 3) - s.c) < 1e-15);
    CHECK(std::abs(a(2, 4) + s.t * s.b) < 1e-15);
    CHECK(std::abs(a(3, 4) - s.s) < 1e-15);
    CHECK(validate_partial_isometry(a));
    CHECK((a * a * a * a).frobenius_norm() == 0.0);  // nilpotent of order 4

    // xi spans ker Im(A)
    const ComplexVector xi = kernel_vector_xi(s);
    REQUIRE(xi.size() == 5);
    const ComplexVector y = im_part(a).apply(xi);
    for (const Complex& v : y) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("exceptional spec reduces to the nilpotent family") {
    const ExceptionalDim5 plus(ExcSign::plus, 0.0);
    const NilpotentDim5 d5 = exceptional_as_dim5(plus);
    CHECK(d5.b == doctest::Approx(d5.t).epsilon(1e-12));  // b = t at the exceptional point
    CHECK(entry_dist(build(plus), build(d5)) < 1e-15);

    const double phi = 1.3;
    ComplexMatrix rotated = build(d5);
    rotated *= std::polar(1.0, phi);
    CHECK(entry_dist(build(ExceptionalDim5(ExcSign::plus, phi)), rotated) < 1e-14);
}

TEST_CASE("phi wraps by full turns") {
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(entry_dist(build(ExceptionalDim5(ExcSign::minus, 7.0)),
                     build(ExceptionalDim5(ExcSign::minus, 7.0 - two_pi))) < 1e-12);
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_WITH_AS(NilpotentDim4(1.5), "NilpotentDim4: b must lie in [0, 1]",
                         InvalidSpecError);
    CHECK_THROWS_AS(NilpotentDim4(-0.01), InvalidSpecError);
    CHECK_THROWS_AS(NilpotentDim5(0.5, 1.01), InvalidSpecError);
    CHECK_THROWS_AS(NilpotentDim5(std::nan(""), 0.5), InvalidSpecError);
    CHECK_THROWS_AS(Rank2Dim3(Complex(1.0, 0.0), Complex(0.0, 0.0)), InvalidSpecError);
    CHECK_THROWS_AS(ExceptionalDim5(ExcSign::plus, std::numeric_limits<double>::infinity()),
                    InvalidSpecError);
    CHECK_THROWS_AS(RawBlocks(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                    InvalidSpecError);
    CHECK_THROWS_AS(RawBlocks(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                    InvalidSpecError);
}

TEST_CASE("builders re-check invariants after member mutation") {
    NilpotentDim4 s(0.5);
    s.c = 0.9;  // breaks b^2 + c^2 = 1
    CHECK_THROWS_AS(build(PisomSpec(s)), InvalidSpecError);

    NilpotentDim5 s5(0.5, 0.5);
    s5.s = -s5.s;  // signs are part of the parameterization
    CHECK_THROWS_AS(build(PisomSpec(s5)), InvalidSpecError);
}

TEST_CASE("raw block layout [[0, B], [0, C]]") {
    ComplexMatrix bb(2), cc(2);
    bb(0, 0) = 1.0;
    bb(1, 1) = 0.6;
    cc(0, 1) = 0.8;
    const ComplexMatrix a = build(RawBlocks(bb, cc));
    REQUIRE(a.dim() == 4);
    CHECK(a(0, 2) == Complex(1, 0));
    CHECK(std::abs(a(1, 3) - 0.6) < 1e-15);
    CHECK(std::abs(a(2, 3) - 0.8) < 1e-15);
    CHECK(a(2, 2) == Complex(0, 0));
    CHECK(a(1, 0) == Complex(0, 0));
    CHECK(validate_partial_isometry(a));
}

TEST_CASE("partial isometry validator") {
    CHECK(validate_partial_isometry(ComplexMatrix(3)));  // the zero matrix satisfies AA*A = A
    CHECK(validate_partial_isometry(ComplexMatrix::identity(4)));

    ComplexMatrix half(3);
    half(0, 0) = 0.5;  // diag(1/2, 0, 0) shrinks its row space
    CHECK_FALSE(validate_partial_isometry(half));

    ComplexMatrix j2(2);
    j2(0, 1) = 1.0;
    CHECK(validate_partial_isometry(j2));
}

TEST_CASE("spec_dim covers every variant") {
    CHECK(spec_dim(Rank2Dim3(Complex(0.1, 0), Complex(0.2, 0))) == 3);
    CHECK(spec_dim(NilpotentDim4(0.5)) == 4);
    CHECK(spec_dim(NilpotentDim5(0.5, 0.5)) == 5);
    CHECK(spec_dim(ExceptionalDim5(ExcSign::minus, 0.0)) == 5);
    ComplexMatrix bb(2), cc(2);
    bb(0, 0) = 1.0;
    bb(1, 1) = 0.6;
    cc(0, 1) = 0.8;
    CHECK(spec_dim(RawBlocks(bb, cc)) == 4);
}

TEST_CASE("seeded random partial isometries") {
    const ComplexMatrix a = random_partial_isometry(6, 3, 42);
    const ComplexMatrix b = random_partial_isometry(6, 3, 42);
    CHECK(a.entries() == b.entries());  // bitwise deterministic
    CHECK(validate_partial_isometry(a));

    // A*A is the projection onto a rank-3 subspace
    const std::vector<double> sv = hermitian_eigen(a.adjoint() * a).values;
    for (int i = 0; i < 3; ++i) CHECK(sv[i] == doctest::Approx(1.0).epsilon(1e-10));
    for (int i = 3; i < 6; ++i) CHECK(std::abs(sv[i]) < 1e-10);

    const ComplexMatrix other = random_partial_isometry(6, 3, 43);
    CHECK(entry_dist(a, other) > 1e-3);

    // full rank gives a unitary
    const ComplexMatrix u = random_partial_isometry(4, 4, 7);
    CHECK((u * u.adjoint() - ComplexMatrix::identity(4)).frobenius_norm() < 1e-10);

    CHECK_THROWS_AS(random_partial_isometry(13, 2, 1), InvalidRankError);
    CHECK_THROWS_AS(random_partial_isometry(4, 0, 1), InvalidRankError);
    CHECK_THROWS_AS(random_partial_isometry(4, 5, 1), InvalidRankError);
}

}  // TEST_SUITE

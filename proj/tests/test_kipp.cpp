#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nrpi/kipp.hpp"
#include "nrpi/pisom.hpp"

using namespace nrpi;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix jordan2() {
    ComplexMatrix a(2);
    a(0, 1) = 1.0;
    return a;
}

// diag(1, i, -1, -i): numerical range is the square on the 4th roots of unity
ComplexMatrix fourth_roots() {
    ComplexMatrix a(4);
    a(0, 0) = {1, 0};
    a(1, 1) = {0, 1};
    a(2, 2) = {-1, 0};
    a(3, 3) = {0, -1};
    return a;
}

double poly_support(const RankKRange& r, double theta) {
    const Complex dir = std::polar(1.0, -theta);
    if (r.verdict == RankKRange::Verdict::SinglePoint) return (dir * r.point).real();
    double h = -1e300;
    for (Complex v : r.vertices) h = std::max(h, (dir * v).real());
    return h;
}

}  // namespace

TEST_SUITE("kipp") {

TEST_CASE("angle grid convention") {
    const std::vector<double> g = grid_thetas(8);
    REQUIRE(g.size() == 8);
    CHECK(g.back() == doctest::Approx(kPi));          // always contains pi
    CHECK(std::abs(g[3]) < 1e-15);                    // even grids contain 0
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] - g[i - 1] == doctest::Approx(2.0 * kPi / 8));
    CHECK_THROWS_AS(grid_thetas(7), Error);
}

TEST_CASE("Jordan block gives the half-unit disk") {
    const ComplexMatrix a = jordan2();

    const SupportSweep sw = sweep(a, 32);
    REQUIRE(sw.matrix_dim == 2);
    for (const std::vector<double>& row : sw.eigs) {
        CHECK(row[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(row[1] == doctest::Approx(-0.5).epsilon(1e-12));
    }

    for (Complex p : boundary(a, 32).points) CHECK(std::abs(p) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(numerical_radius(a, 32) == doctest::Approx(0.5).epsilon(1e-10));

    const std::optional<double> disk = circular_disk_test(a, 64);
    REQUIRE(disk.has_value());
    CHECK(*disk == doctest::Approx(0.5).epsilon(1e-10));

    const CircleSet circles = detect_circles(a, 64);
    REQUIRE(circles.radii.size() == 1);
    CHECK(circles.radii[0] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("sweep rows equal the direct eigenvalues") {
    const ComplexMatrix a = build(NilpotentDim5(0.5, 0.5));
    const SupportSweep sw = sweep(a, 16);
    const std::vector<double> g = grid_thetas(16);
    REQUIRE(sw.thetas == g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::vector<double> direct = hermitian_eigen(re_part(rotate(a, g[i]))).values;
        REQUIRE(sw.eigs[i].size() == direct.size());
        for (std::size_t j = 0; j < direct.size(); ++j)
            CHECK(sw.eigs[i][j] == doctest::Approx(direct[j]).epsilon(1e-13));
    }
}

TEST_CASE("boundary points touch their support lines") {
    const ComplexMatrix a = build(NilpotentDim4(0.3));
    const SupportSweep sw = sweep(a, 64);
    const BoundaryCurve c = boundary(a, 64);
    REQUIRE(c.points.size() == 64);
    CHECK(c.closed);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const double h = (std::polar(1.0, -c.thetas[i]) * c.points[i]).real();
        CHECK(h == doctest::Approx(sw.eigs[i][0]).epsilon(1e-10));
    }
}

TEST_CASE("kippenhahn coefficients of diag(1, i)") {
    ComplexMatrix a(2);
    a(0, 0) = {1, 0};
    a(1, 1) = {0, 1};
    const double theta = 0.3;
    // Re(e^{-i theta} A) = diag(cos theta, sin theta)
    const RealPolynomial p = kippenhahn_coeffs(a, theta);
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs[0] == doctest::Approx(std::cos(theta) * std::sin(theta)).epsilon(1e-14));
    CHECK(p.coeffs[1] == doctest::Approx(-(std::cos(theta) + std::sin(theta))).epsilon(1e-14));
    CHECK(p.coeffs[2] == doctest::Approx(1.0));
}

TEST_CASE("kippenhahn quintic of the 5x5 nilpotent family") {
    const NilpotentDim5 s(0.5, 0.5);
    const double theta = 0.9;
    const RealPolynomial p = kippenhahn_coeffs(build(s), theta);
    REQUIRE(p.degree() == 5);
    const double c1 = (s.c * s.c * s.t * s.t + s.b * s.b + 1.0) / 16.0;
    const double c0 = s.b * s.c * s.s * s.t * std::cos(theta) / 16.0;
    CHECK(p.coeffs[0] == doctest::Approx(c0).epsilon(1e-12));
    CHECK(p.coeffs[1] == doctest::Approx(c1).epsilon(1e-12));
    CHECK(std::abs(p.coeffs[2]) < 1e-14);
    CHECK(p.coeffs[3] == doctest::Approx(-0.75).epsilon(1e-13));
    CHECK(std::abs(p.coeffs[4]) < 1e-14);
    CHECK(p.coeffs[5] == doctest::Approx(1.0));
}

TEST_CASE("numerical radius of an elliptical 3x3 example") {
    // foci +-0.3, so the semi-major axis is the refined radius
    const ComplexMatrix a = build(Rank2Dim3(Complex(0.3, 0), Complex(-0.3, 0)));
    CHECK(numerical_radius(a, 360) == doctest::Approx(0.7382411530116697).epsilon(1e-9));
}

TEST_CASE("disk radii of the 4x4 nilpotent family") {
    const ComplexMatrix a = build(NilpotentDim4(0.5));
    const std::optional<double> disk = circular_disk_test(a, 128);
    REQUIRE(disk.has_value());
    CHECK(*disk == doctest::Approx(0.6830127018922193).epsilon(1e-10));

    const CircleSet circles = detect_circles(a, 128);
    REQUIRE(circles.radii.size() == 2);
    CHECK(circles.radii[0] == doctest::Approx(0.18301270189221935).epsilon(1e-10));
    CHECK(circles.radii[1] == doctest::Approx(0.6830127018922193).epsilon(1e-10));
}

TEST_CASE("disk radii of the 5x5 family on the b c s t = 0 locus") {
    const ComplexMatrix a = build(NilpotentDim5(0.0, 0.0));
    const std::optional<double> disk = circular_disk_test(a, 128);
    REQUIRE(disk.has_value());
    CHECK(*disk == doctest::Approx(std::cos(kPi / 5)).epsilon(1e-10));

    const CircleSet circles = detect_circles(a, 128);
    REQUIRE(circles.radii.size() == 3);  // 0 persists as a root of the odd-degree quintic
    CHECK(std::abs(circles.radii[0]) < 1e-12);
    CHECK(circles.radii[1] == doctest::Approx(std::cos(2 * kPi / 5)).epsilon(1e-10));
    CHECK(circles.radii[2] == doctest::Approx(std::cos(kPi / 5)).epsilon(1e-10));
}

TEST_CASE("the interior 5x5 matrices are not disks") {
    const ComplexMatrix a = build(NilpotentDim5(0.5, 0.5));
    CHECK_FALSE(circular_disk_test(a, 128).has_value());
    CHECK(detect_circles(a, 128).radii.empty());
}

TEST_CASE("grid-aligned polygon spectra trip the stability guard") {
    // vertices exactly on the coarse grid: constant at m = 8, not at m = 16
    ComplexMatrix a(8);
    for (int j = 0; j < 8; ++j) a(j, j) = std::polar(1.0, 2.0 * kPi * j / 8.0);
    CHECK_THROWS_AS(circular_disk_test(a, 8), GridUnstableError);
    CHECK_THROWS_AS(detect_circles(a, 8), GridUnstableError);
}

TEST_CASE("rank-k ranges of the 4th-roots-of-unity unitary") {
    const ComplexMatrix a = fourth_roots();

    const RankKRange r1 = rank_k_range(a, 1, 360);
    REQUIRE(r1.verdict == RankKRange::Verdict::Polygon);
    CHECK(poly_support(r1, 0.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(poly_support(r1, kPi / 2) == doctest::Approx(1.0).epsilon(1e-8));

    const RankKRange r2 = rank_k_range(a, 2, 360);
    REQUIRE(r2.verdict == RankKRange::Verdict::SinglePoint);
    CHECK(std::abs(r2.point) < 1e-8);

    CHECK(rank_k_range(a, 3, 360).verdict == RankKRange::Verdict::EmptySet);
    CHECK(rank_k_range(a, 4, 360).verdict == RankKRange::Verdict::EmptySet);

    CHECK_THROWS_AS(rank_k_range(a, 0, 360), InvalidKError);
    CHECK_THROWS_AS(rank_k_range(a, 5, 360), InvalidKError);
}

TEST_CASE("rank-2 range of the 4x4 disk family") {
    const RankKRange r = rank_k_range(build(NilpotentDim4(0.5)), 2, 240);
    REQUIRE(r.verdict == RankKRange::Verdict::Polygon);
    for (double theta : grid_thetas(240))
        CHECK(poly_support(r, theta) == doctest::Approx(0.18301270189221935).epsilon(1e-6));
}

TEST_CASE("grid and dimension guards") {
    CHECK_THROWS_AS(sweep(jordan2(), 4), Error);
    CHECK_THROWS_AS(sweep(ComplexMatrix::identity(65), 16), Error);
    CHECK_THROWS_AS(boundary(jordan2(), 7), Error);
}

}  // TEST_SUITE

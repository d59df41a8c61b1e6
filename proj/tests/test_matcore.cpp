#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nrpi/matcore.hpp"

using namespace nrpi;

namespace {

// Tiny fixed-seed generator for test fixtures (xorshift-ish, not the library's).
struct TestRng {
    std::uint64_t s = 0x2545F4914F6CDD1Dull;
    double next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    }
};

ComplexMatrix random_hermitian(int n, TestRng& rng) {
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = rng.next();
        for (int j = i + 1; j < n; ++j) {
            h(i, j) = Complex(rng.next(), rng.next());
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("identity, adjoint, trace, norms") {
    ComplexMatrix a(2);
    a(0, 0) = {1, 2};
    a(0, 1) = {0, 1};
    a(1, 0) = {3, 0};
    a(1, 1) = {0, -1};

    const ComplexMatrix ad = a.adjoint();
    CHECK(ad(0, 0) == Complex(1, -2));
    CHECK(ad(0, 1) == Complex(3, 0));
    CHECK(ad(1, 0) == Complex(0, -1));
    CHECK(ad(1, 1) == Complex(0, 1));

    CHECK(a.trace() == Complex(1, 1));
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(16.0)));
    CHECK(a.max_abs() == doctest::Approx(3.0));

    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(id(1, 1) == Complex(1, 0));
    CHECK(id(0, 2) == Complex(0, 0));
    CHECK((a * ComplexMatrix::identity(2) - a).frobenius_norm() == 0.0);
}

TEST_CASE("constructor rejects bad shapes") {
    CHECK_THROWS_AS(ComplexMatrix(0), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), Error);
}

TEST_CASE("product against a hand-computed 2x2 case") {
    ComplexMatrix a(2), b(2);
    a(0, 0) = {1, 1};
    a(0, 1) = {2, 0};
    a(1, 1) = {0, 1};
    b(0, 0) = {0, 1};
    b(1, 0) = {1, 0};
    b(1, 1) = {3, 0};

    const ComplexMatrix c = a * b;
    CHECK(std::abs(c(0, 0) - Complex(1, 1)) < 1e-15);   // (1+i)i + 2
    CHECK(std::abs(c(0, 1) - Complex(6, 0)) < 1e-15);   // 2*3
    CHECK(std::abs(c(1, 0) - Complex(0, 1)) < 1e-15);   // i*1
    CHECK(std::abs(c(1, 1) - Complex(0, 3)) < 1e-15);   // i*3
}

TEST_CASE("apply and column agree with the product") {
    TestRng rng;
    const ComplexMatrix a = random_hermitian(4, rng);
    const ComplexVector x = {1.0, Complex(0, 1), -2.0, 0.5};
    const ComplexVector y = a.apply(x);
    for (int i = 0; i < 4; ++i) {
        Complex want = 0.0;
        for (int j = 0; j < 4; ++j) want += a(i, j) * x[j];
        CHECK(std::abs(y[i] - want) < 1e-14);
    }
    const ComplexVector col = a.column(2);
    for (int i = 0; i < 4; ++i) CHECK(col[i] == a(i, 2));
}

TEST_CASE("real/imaginary split reassembles the matrix") {
    TestRng rng;
    ComplexMatrix a(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = Complex(rng.next(), rng.next());

    const ComplexMatrix re = re_part(a), im = im_part(a);
    CHECK(detail::hermitian_deviation(re) < 1e-15);
    CHECK(detail::hermitian_deviation(im) < 1e-15);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(re(i, j) + Complex(0, 1) * im(i, j) - a(i, j)) < 1e-15);
}

TEST_CASE("rotate multiplies by e^{-i theta}") {
    ComplexMatrix a(1);
    a(0, 0) = {2, 0};
    const ComplexMatrix r = rotate(a, std::numbers::pi / 2);
    CHECK(std::abs(r(0, 0) - Complex(0, -2)) < 1e-15);
}

TEST_CASE("eigensolver on known Hermitian matrices") {
    ComplexMatrix h(2);
    h(0, 0) = 2.0;
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    h(1, 1) = 2.0;
    HermitianEigenResult e = hermitian_eigen(h);
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    // complex off-diagonal: [[2, i], [-i, 2]] has the same spectrum
    h(0, 1) = {0, 1};
    h(1, 0) = {0, -1};
    e = hermitian_eigen(h);
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("descending sort with deterministic degenerate ordering") {
    ComplexMatrix h(4);
    h(0, 0) = 1.0;
    h(1, 1) = 3.0;
    h(2, 2) = 3.0;
    h(3, 3) = -1.0;
    const HermitianEigenResult e = hermitian_eigen(h);
    CHECK(e.values[0] == doctest::Approx(3.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
    CHECK(e.values[2] == doctest::Approx(1.0));
    CHECK(e.values[3] == doctest::Approx(-1.0));
    // within the repeated pair, the vector supported on the earlier row comes first
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(2, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eigen residuals and orthonormality on random Hermitian batches") {
    TestRng rng;
    for (int n : {2, 3, 5, 8, 12}) {
        const ComplexMatrix h = random_hermitian(n, rng);
        const double scale = h.frobenius_norm();
        const HermitianEigenResult e = hermitian_eigen(h);

        double trace_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            trace_sum += e.values[j];
            if (j + 1 < n) CHECK(e.values[j] >= e.values[j + 1]);
            const ComplexVector v = e.vectors.column(j);
            const ComplexVector hv = h.apply(v);
            double resid = 0.0;
            for (int i = 0; i < n; ++i) resid += std::norm(hv[i] - e.values[j] * v[i]);
            CHECK(std::sqrt(resid) <= 1e-12 * scale);
        }
        CHECK(trace_sum == doctest::Approx(h.trace().real()).epsilon(1e-12));

        const ComplexMatrix vtv = e.vectors.adjoint() * e.vectors;
        CHECK((vtv - ComplexMatrix::identity(n)).frobenius_norm() < 1e-12);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix j2(2);
    j2(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(j2), NotHermitianError);
}

TEST_CASE("dimension cap on the public eigensolver") {
    CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix::identity(65)), Error);
    CHECK_NOTHROW(hermitian_eigen(ComplexMatrix::identity(64)));
}

TEST_CASE("characteristic polynomial of diag(1,2,3)") {
    ComplexMatrix h(3);
    h(0, 0) = 1.0;
    h(1, 1) = 2.0;
    h(2, 2) = 3.0;
    const RealPolynomial p = char_poly(h);
    REQUIRE(p.degree() == 3);
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CHECK(p.coeffs[0] == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK(p.coeffs[1] == doctest::Approx(11.0).epsilon(1e-14));
    CHECK(p.coeffs[2] == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK(p.coeffs[3] == doctest::Approx(1.0));
    CHECK(std::abs(p.eval(2.0)) < 1e-13);
}

TEST_CASE("characteristic polynomial vanishes on the computed spectrum") {
    TestRng rng;
    const ComplexMatrix h = random_hermitian(5, rng);
    const RealPolynomial p = char_poly(h);
    const double scale = std::pow(1.0 + h.frobenius_norm(), 5);
    for (double v : hermitian_eigen(h).values) CHECK(std::abs(p.eval(v)) <= 1e-10 * scale);
}

TEST_CASE("polynomial evaluation is plain Horner") {
    const RealPolynomial p{{1.0, 2.0, 3.0}};  // 1 + 2x + 3x^2
    CHECK(p.eval(0.0) == 1.0);
    CHECK(p.eval(2.0) == 17.0);
    CHECK(p.degree() == 2);
}

}  // TEST_SUITE

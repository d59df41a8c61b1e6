#include "nrpi/kipp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nrpi/golden.hpp"

namespace nrpi {

namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(int m) {
    if (m < 8) throw Error("sweep: grid size must be at least 8");
}

std::vector<double> eigenvalues_at(const ComplexMatrix& a, double theta) {
    return detail::jacobi_eigen(re_part(rotate(a, theta))).values;
}

}  // namespace

std::vector<double> grid_thetas(int m) {
    require_grid(m);
    std::vector<double> thetas(m);
    for (int i = 0; i < m; ++i) thetas[i] = -kPi + 2.0 * kPi * (i + 1) / m;
    return thetas;
}

SupportSweep sweep(const ComplexMatrix& a, int m) {
    require_grid(m);
    if (a.dim() > 64) throw Error("sweep: dimension cap is 64");
    SupportSweep s;
    s.thetas = grid_thetas(m);
    s.matrix_dim = a.dim();
    s.eigs.reserve(m);
    for (double theta : s.thetas) s.eigs.push_back(eigenvalues_at(a, theta));
    return s;
}

BoundaryCurve boundary(const ComplexMatrix& a, int m) {
    require_grid(m);
    if (a.dim() > 64) throw Error("boundary: dimension cap is 64");
    const int n = a.dim();
    BoundaryCurve curve;
    curve.thetas = grid_thetas(m);
    curve.points.reserve(m);
    for (double theta : curve.thetas) {
        const HermitianEigenResult er = detail::jacobi_eigen(re_part(rotate(a, theta)));
        const ComplexVector x = er.vectors.column(0);
        const ComplexVector ax = a.apply(x);
        Complex p = 0.0;
        for (int i = 0; i < n; ++i) p += std::conj(x[i]) * ax[i];
        curve.points.push_back(p);
    }
    curve.closed = true;
    return curve;
}

double numerical_radius(const ComplexMatrix& a, int m) {
    require_grid(m);
    const std::vector<double> thetas = grid_thetas(m);
    const double dtheta = 2.0 * kPi / m;

    double best = -1.0;
    double best_theta = thetas[0];
    for (double theta : thetas) {
        const double lam = eigenvalues_at(a, theta)[0];
        if (lam > best) {
            best = lam;
            best_theta = theta;
        }
    }
    auto [theta_ref, refined] = golden_maximize(
        [&](double theta) { return eigenvalues_at(a, theta)[0]; }, best_theta - dtheta,
        best_theta + dtheta);
    (void)theta_ref;
    return std::max(best, refined);
}

RealPolynomial kippenhahn_coeffs(const ComplexMatrix& a, double theta) {
    return char_poly(re_part(rotate(a, theta)));
}

namespace {

std::vector<double> detect_circles_once(const ComplexMatrix& a, int m, double tol) {
    const int n = a.dim();
    const double dedupe = 1e-9 * (1.0 + a.frobenius_norm());
    const double accept = tol * std::pow(1.0 + a.frobenius_norm(), n);

    // Candidate radii: moduli of the theta = 0 eigenvalues (a circular
    // component lambda^2 - r^2 divides every P_{A,theta}, in particular at 0).
    std::vector<double> candidates;
    for (double lam : eigenvalues_at(a, 0.0)) {
        const double r = std::abs(lam);
        bool seen = false;
        for (double c : candidates) seen = seen || std::abs(c - r) <= dedupe;
        if (!seen) candidates.push_back(r);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<double> accepted;
    const std::vector<double> thetas = grid_thetas(m);
    for (double r : candidates) {
        double worst = 0.0;
        for (double theta : thetas) {
            const RealPolynomial p = kippenhahn_coeffs(a, theta);
            worst = std::max(worst, std::abs(p.eval(r)));
            worst = std::max(worst, std::abs(p.eval(-r)));
            if (worst > accept) break;
        }
        if (worst <= accept) accepted.push_back(r);
    }
    return accepted;
}

}  // namespace

CircleSet detect_circles(const ComplexMatrix& a, int m, double tol) {
    require_grid(m);
    const std::vector<double> first = detect_circles_once(a, m, tol);
    const std::vector<double> second = detect_circles_once(a, 2 * m, tol);

    const double agree = 1e-9 * (1.0 + a.frobenius_norm());
    bool same = first.size() == second.size();
    for (std::size_t i = 0; same && i < first.size(); ++i)
        same = std::abs(first[i] - second[i]) <= agree;
    if (!same)
        throw GridUnstableError("detect_circles: grid m and 2m disagree on accepted radii");
    return CircleSet{second};
}

namespace {

struct DiskScan {
    bool constant;
    double mean;
};

DiskScan disk_scan(const ComplexMatrix& a, int m, double tol) {
    double lo = 0.0, hi = 0.0, sum = 0.0;
    bool start = true;
    for (double theta : grid_thetas(m)) {
        const double lam = eigenvalues_at(a, theta)[0];
        lo = start ? lam : std::min(lo, lam);
        hi = start ? lam : std::max(hi, lam);
        sum += lam;
        start = false;
    }
    return DiskScan{hi - lo <= tol, sum / m};
}

}  // namespace

std::optional<double> circular_disk_test(const ComplexMatrix& a, int m, double tol) {
    require_grid(m);
    const DiskScan coarse = disk_scan(a, m, tol);
    const DiskScan fine = disk_scan(a, 2 * m, tol);
    if (coarse.constant != fine.constant)
        throw GridUnstableError("circular_disk_test: grid m and 2m disagree on constancy");
    if (!coarse.constant) return std::nullopt;
    return coarse.mean;
}

namespace {

// Sutherland-Hodgman clip of a convex polygon against Re(conj(dir) z) <= bound.
ComplexVector clip_half_plane(const ComplexVector& poly, Complex dir, double bound) {
    ComplexVector out;
    const std::size_t v = poly.size();
    if (v == 0) return out;
    auto excess = [&](Complex z) { return (std::conj(dir) * z).real() - bound; };
    for (std::size_t i = 0; i < v; ++i) {
        const Complex p = poly[i];
        const Complex q = poly[(i + 1) % v];
        const double fp = excess(p);
        const double fq = excess(q);
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0))
            out.push_back(p + (q - p) * (fp / (fp - fq)));
    }
    return out;
}

ComplexVector dedupe_closed(const ComplexVector& poly, double eps) {
    ComplexVector out;
    for (const Complex& p : poly) {
        if (out.empty() || std::abs(p - out.back()) > eps) out.push_back(p);
    }
    while (out.size() > 1 && std::abs(out.front() - out.back()) <= eps) out.pop_back();
    return out;
}

double diameter(const ComplexVector& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

RankKRange rank_k_once(const ComplexMatrix& a, int k, int m, double tol) {
    const double norm = a.frobenius_norm();
    const double slack = 1e-12 * (1.0 + norm);
    const double half = 2.0 * norm + slack;  // bounding square of side 4||A||

    ComplexVector poly = {Complex(-half, -half), Complex(half, -half), Complex(half, half),
                          Complex(-half, half)};

    const std::vector<double> thetas = grid_thetas(m);
    std::vector<double> bounds;
    bounds.reserve(thetas.size());
    for (std::size_t i = 0; i < thetas.size() && !poly.empty(); ++i) {
        const double lam_k = eigenvalues_at(a, thetas[i])[k - 1];
        bounds.push_back(lam_k);
        poly = clip_half_plane(poly, std::polar(1.0, thetas[i]), lam_k + slack);
    }

    RankKRange r;
    r.k = k;
    poly = dedupe_closed(poly, 1e-12 * (1.0 + norm));

    if (poly.size() >= 3 && diameter(poly) >= tol) {
        r.verdict = RankKRange::Verdict::Polygon;
        r.vertices = poly;
        return r;
    }

    // Degenerate clip: decide empty vs single point by testing the candidate
    // (the centroid of any surviving vertices, else the origin-shifted best
    // guess) against the constraints.
    Complex candidate = 0.0;
    if (!poly.empty()) {
        for (const Complex& p : poly) candidate += p;
        candidate /= static_cast<double>(poly.size());
    }
    double violation = 0.0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const Complex dir = std::polar(1.0, thetas[i]);
        violation = std::max(violation, (std::conj(dir) * candidate).real() - bounds[i]);
    }
    if (poly.empty() || violation > std::max(tol, 10.0 * slack)) {
        r.verdict = RankKRange::Verdict::EmptySet;
    } else {
        r.verdict = RankKRange::Verdict::SinglePoint;
        r.point = candidate;
    }
    return r;
}

}  // namespace

RankKRange rank_k_range(const ComplexMatrix& a, int k, int m, double tol) {
    require_grid(m);
    if (k < 1 || k > a.dim())
        throw InvalidKError("rank_k_range: k must satisfy 1 <= k <= n");

    const RankKRange coarse = rank_k_once(a, k, m, tol);
    const RankKRange fine = rank_k_once(a, k, 2 * m, tol);
    if (coarse.verdict != fine.verdict)
        throw GridUnstableError("rank_k_range: grid m and 2m disagree on classification");
    if (coarse.verdict == RankKRange::Verdict::SinglePoint &&
        std::abs(coarse.point - fine.point) > 1e-8 * (1.0 + a.frobenius_norm()))
        throw GridUnstableError("rank_k_range: grid m and 2m disagree on the point");
    return coarse;
}

}  // namespace nrpi

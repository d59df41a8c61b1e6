#include "nrpi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nrpi/golden.hpp"

namespace nrpi {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta <= -kPi) theta += 2.0 * kPi;
    if (theta > kPi) theta -= 2.0 * kPi;
    return theta;
}

// Adjacent gap lambda_level - lambda_level+1 (0-based level) at one angle.
double gap_at(const ComplexMatrix& a, int level, double theta) {
    const std::vector<double> v = detail::jacobi_eigen(re_part(rotate(a, theta))).values;
    return v[level] - v[level + 1];
}

struct GapMinimum {
    double theta;
    double gap;
    int level;  // 0-based
};

// Local minima of the per-level gap functions over the sweep, refined by
// golden-section search. Consecutive grid indices tied at a minimum (plateaus,
// e.g. theta-independent spectra) are treated as one bracket.
std::vector<GapMinimum> refined_gap_minima(const ComplexMatrix& a, const SupportSweep& s) {
    const int m = static_cast<int>(s.thetas.size());
    const int n = s.matrix_dim;
    const double dtheta = 2.0 * kPi / m;
    std::vector<GapMinimum> minima;

    for (int level = 0; level + 1 < n; ++level) {
        std::vector<double> g(m);
        for (int i = 0; i < m; ++i) g[i] = s.eigs[i][level] - s.eigs[i][level + 1];

        std::vector<bool> is_min(m);
        for (int i = 0; i < m; ++i)
            is_min[i] = g[i] <= g[(i + m - 1) % m] && g[i] <= g[(i + 1) % m];

        // Gather circular runs of minimum indices; one refinement per run.
        std::vector<std::pair<int, int>> runs;  // [first, last] inclusive, circular
        int i = 0;
        while (i < m && is_min[i]) ++i;  // skip a run that wraps past index 0
        const int start = i;
        while (i < start + m) {
            if (!is_min[i % m]) {
                ++i;
                continue;
            }
            const int first = i;
            while (i < start + m && is_min[i % m]) ++i;
            runs.push_back({first % m, (i - 1) % m});
        }
        if (runs.empty() && m > 0 && is_min[0]) runs.push_back({0, m - 1});  // constant row

        for (auto [first, last] : runs) {
            const int span = (last - first + m) % m + 1;
            const double lo = s.thetas[first] - dtheta;
            const double hi = lo + (span + 1) * dtheta;
            auto [theta_ref, gap_ref] =
                golden_minimize([&](double t) { return gap_at(a, level, t); }, lo, hi);
            double theta = theta_ref;
            double gap = gap_ref;
            if (g[first] < gap) {  // golden never loses to the grid sample
                theta = s.thetas[first];
                gap = g[first];
            }
            minima.push_back(GapMinimum{wrap_angle(theta), gap, level});
        }
    }
    return minima;
}

}  // namespace

GenericityReport genericity(const ComplexMatrix& a, int m, double gap_tol) {
    GenericityReport report;
    if (a.dim() < 2) {
        report.generic = true;
        report.min_gap = std::numeric_limits<double>::infinity();
        return report;
    }
    const SupportSweep s = sweep(a, m);
    const std::vector<GapMinimum> minima = refined_gap_minima(a, s);

    bool first = true;
    for (const GapMinimum& gm : minima) {
        if (first || gm.gap < report.min_gap) {
            report.min_gap = gm.gap;
            report.witness_theta = gm.theta;
            report.witness_level = gm.level + 1;
            first = false;
        }
    }
    report.generic = report.min_gap > gap_tol;
    return report;
}

std::vector<FlatPortion> flat_portions(const ComplexMatrix& a, int m, double tol) {
    std::vector<FlatPortion> portions;
    const int n = a.dim();
    if (n < 2) return portions;

    const SupportSweep s = sweep(a, m);
    const double dtheta = 2.0 * kPi / m;

    // Collision angles of the top pair, deduplicated circularly.
    std::vector<double> collision_thetas;
    for (const GapMinimum& gm : refined_gap_minima(a, s)) {
        if (gm.level != 0 || gm.gap > tol) continue;
        bool seen = false;
        for (double t : collision_thetas)
            seen = seen || std::abs(wrap_angle(gm.theta - t)) < dtheta;
        if (!seen) collision_thetas.push_back(gm.theta);
    }

    for (double theta : collision_thetas) {
        const HermitianEigenResult er = detail::jacobi_eigen(re_part(rotate(a, theta)));
        int d = 1;
        while (d < n && er.values[0] - er.values[d] <= tol) ++d;
        if (d < 2) continue;

        // Compression of Im(e^{-i theta} A) onto the top eigenspace.
        const ComplexMatrix im = im_part(rotate(a, theta));
        ComplexMatrix comp(d);
        for (int k = 0; k < d; ++k) {
            const ComplexVector col = im.apply(er.vectors.column(k));
            for (int l = 0; l < d; ++l) {
                Complex acc = 0.0;
                for (int i = 0; i < n; ++i) acc += std::conj(er.vectors(i, l)) * col[i];
                comp(l, k) = acc;
            }
        }
        const std::vector<double> mu = detail::jacobi_eigen(comp).values;
        if (mu.front() - mu.back() <= tol) continue;  // scalar compression: no segment

        double support = 0.0;
        for (int k = 0; k < d; ++k) support += er.values[k];
        support /= d;

        FlatPortion portion;
        portion.direction = theta;
        portion.support_value = support;
        const Complex phase = std::polar(1.0, theta);
        portion.endpoints[0] = phase * Complex(support, mu.front());
        portion.endpoints[1] = phase * Complex(support, mu.back());
        portions.push_back(portion);
    }
    return portions;
}

Classification3x3 classify_3x3(const ComplexMatrix& a, double tol) {
    if (a.dim() != 3) throw Error("classify_3x3: input must be 3x3");
    const double scale = 1.0 + a.max_abs();
    if (std::abs(a(1, 0)) > tol * scale || std::abs(a(2, 0)) > tol * scale ||
        std::abs(a(2, 1)) > tol * scale)
        throw NotTriangularError("classify_3x3: input must be upper triangular");

    const Complex x = a(0, 1), y = a(0, 2), z = a(1, 2);
    const Complex da = a(0, 0), db = a(1, 1), dc = a(2, 2);
    if (std::abs(x) <= tol * scale && std::abs(y) <= tol * scale && std::abs(z) <= tol * scale)
        throw ReducibleInputError("classify_3x3: off-diagonal part vanishes (normal input)");

    const double weight = std::norm(x) + std::norm(y) + std::norm(z);
    Classification3x3 result;
    result.lambda_star =
        (dc * std::norm(x) + db * std::norm(y) + da * std::norm(z) - x * std::conj(y) * z) /
        weight;

    const std::array<Complex, 3> diag = {da, db, dc};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(result.lambda_star - diag[i]) <= tol * scale) {
            result.verdict = Classification3x3::Verdict::EllipticalDisk;
            result.foci = {diag[(i + 1) % 3], diag[(i + 2) % 3]};
            return result;
        }
    }

    // Necessary condition for a boundary segment; confirmed against the
    // sweep-based detector before declaring the verdict.
    if (std::abs(x) > tol * scale && std::abs(y) > tol * scale && std::abs(z) > tol * scale) {
        const double theta0 = std::arg(x * std::conj(y) * z);
        const Complex rot = std::polar(1.0, -theta0);
        const double lhs = std::abs(x * y / z) - 2.0 * (rot * da).real();
        const double rhs = std::abs(x * z / y) - 2.0 * (rot * db).real();
        if (std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs) + std::abs(rhs)) &&
            !flat_portions(a).empty()) {
            result.verdict = Classification3x3::Verdict::FlatPortion;
            return result;
        }
    }
    result.verdict = Classification3x3::Verdict::Ovular;
    return result;
}

CircularityCriterion5 circularity_criterion_5x5(const NilpotentDim5& spec) {
    // Reject hand-mutated specs: the derived entries must be consistent.
    const NilpotentDim5 clean(spec.b, spec.t);
    if (std::abs(clean.c - spec.c) > 1e-12 || std::abs(clean.s - spec.s) > 1e-12)
        throw InvalidSpecError("NilpotentDim5: stored c, s do not match b, t");

    CircularityCriterion5 result;
    result.circular = (spec.b * spec.c * spec.s * spec.t == 0.0);
    if (result.circular) {
        const double inner = spec.b * spec.b + spec.c * spec.c * spec.t * spec.t;
        result.radius = 0.5 * std::sqrt((3.0 + std::sqrt(5.0 - 4.0 * inner)) / 2.0);
    }
    return result;
}

namespace {

// Hermitian X <-> real coordinate vector: n diagonal entries, then
// (re, im) of each strictly-upper entry in row-major pair order.
ComplexMatrix coords_to_hermitian(const std::vector<double>& v, int n) {
    ComplexMatrix x(n);
    for (int i = 0; i < n; ++i) x(i, i) = v[i];
    int p = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            x(i, j) = Complex(v[p], v[p + 1]);
            x(j, i) = std::conj(x(i, j));
            p += 2;
        }
    return x;
}

// Dense column-pivoted Householder QR returning the diagonal of R, the
// column permutation, and R itself (in place); rows >= cols assumed.
struct PivotedQr {
    std::vector<std::vector<double>> r;  // rows x cols, upper part meaningful
    std::vector<int> perm;               // perm[j] = original index of column j
};

PivotedQr pivoted_qr(std::vector<std::vector<double>> mat) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    std::vector<int> perm(cols);
    for (int j = 0; j < cols; ++j) perm[j] = j;

    for (int k = 0; k < cols; ++k) {
        // Pivot: bring the trailing column of largest norm to position k.
        int best = k;
        double best_norm = -1.0;
        for (int j = k; j < cols; ++j) {
            double nj = 0.0;
            for (int i = k; i < rows; ++i) nj += mat[i][j] * mat[i][j];
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best != k) {
            for (int i = 0; i < rows; ++i) std::swap(mat[i][k], mat[i][best]);
            std::swap(perm[k], perm[best]);
        }

        double alpha = std::sqrt(best_norm);
        if (alpha == 0.0) continue;
        if (mat[k][k] > 0.0) alpha = -alpha;

        // Householder vector u = x - alpha e_k, applied as I - 2 u u^T / |u|^2.
        std::vector<double> u(rows - k);
        u[0] = mat[k][k] - alpha;
        for (int i = k + 1; i < rows; ++i) u[i - k] = mat[i][k];
        double unorm2 = 0.0;
        for (double ui : u) unorm2 += ui * ui;
        if (unorm2 == 0.0) continue;

        mat[k][k] = alpha;
        for (int i = k + 1; i < rows; ++i) mat[i][k] = 0.0;
        for (int j = k + 1; j < cols; ++j) {
            double dot = 0.0;
            for (int i = k; i < rows; ++i) dot += u[i - k] * mat[i][j];
            const double f = 2.0 * dot / unorm2;
            for (int i = k; i < rows; ++i) mat[i][j] -= f * u[i - k];
        }
    }
    return PivotedQr{std::move(mat), std::move(perm)};
}

}  // namespace

ReducibilityReport reducibility(const ComplexMatrix& a, double tol) {
    const int n = a.dim();
    if (n > 12) throw Error("reducibility: dimension cap is 12");

    // Real-linear system M v = 0 for Hermitian X with XA - AX = 0
    // (XA* = A*X then follows by taking adjoints). Columns are indexed by
    // the Hermitian coordinate basis; rows by Re/Im of the n^2 commutator
    // entries.
    const int unknowns = n * n;
    const int rows = 2 * n * n;
    std::vector<std::vector<double>> m(rows, std::vector<double>(unknowns, 0.0));
    for (int k = 0; k < unknowns; ++k) {
        std::vector<double> e(unknowns, 0.0);
        e[k] = 1.0;
        const ComplexMatrix basis = coords_to_hermitian(e, n);
        const ComplexMatrix comm = basis * a - a * basis;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m[2 * (i * n + j)][k] = comm(i, j).real();
                m[2 * (i * n + j) + 1][k] = comm(i, j).imag();
            }
    }

    const PivotedQr qr = pivoted_qr(std::move(m));
    const double sigma_max = std::abs(qr.r[0][0]);
    int rank = 0;
    while (rank < unknowns && std::abs(qr.r[rank][rank]) > tol * sigma_max) ++rank;

    ReducibilityReport report;
    report.commutant_dim = unknowns - rank;
    report.reducible = report.commutant_dim >= 2;
    if (!report.reducible) return report;

    // Null basis by back-substitution over the free columns.
    std::vector<std::vector<double>> null_basis;
    for (int f = rank; f < unknowns; ++f) {
        std::vector<double> y(unknowns, 0.0);
        y[f] = 1.0;
        for (int i = rank - 1; i >= 0; --i) {
            double acc = -qr.r[i][f];
            for (int j = i + 1; j < rank; ++j) acc -= qr.r[i][j] * y[j];
            y[i] = acc / qr.r[i][i];
        }
        std::vector<double> v(unknowns, 0.0);
        for (int j = 0; j < unknowns; ++j) v[qr.perm[j]] = y[j];
        null_basis.push_back(std::move(v));
    }

    // Projector witness: spectral truncation (at the widest eigenvalue gap)
    // of the first usefully non-scalar null solution.
    for (const std::vector<double>& v : null_basis) {
        ComplexMatrix x = coords_to_hermitian(v, n);
        const Complex mean = x.trace() / static_cast<double>(n);
        for (int i = 0; i < n; ++i) x(i, i) -= mean;
        const double traceless_norm = x.frobenius_norm();
        if (traceless_norm < 1e-6) continue;
        x *= 1.0 / traceless_norm;

        const HermitianEigenResult er = hermitian_eigen(x);
        int split = 1;
        double widest = -1.0;
        for (int k = 1; k < n; ++k) {
            const double gap = er.values[k - 1] - er.values[k];
            if (gap > widest) {
                widest = gap;
                split = k;
            }
        }
        ComplexMatrix p(n);
        for (int k = 0; k < split; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    p(i, j) += er.vectors(i, k) * std::conj(er.vectors(j, k));

        const double commute_err = (p * a - a * p).frobenius_norm();
        if (commute_err <= 1e-8 * (1.0 + a.frobenius_norm())) {
            report.projector = std::move(p);
            break;
        }
    }
    return report;
}

RangeReport analyze(const ComplexMatrix& a, const AnalyzeOptions& opts) {
    RangeReport report;
    report.dim = a.dim();
    report.partial_isometry = validate_partial_isometry(a, opts.tol);
    report.genericity = genericity(a, opts.grid, opts.gap_tol);
    report.disk_radius = circular_disk_test(a, opts.grid, opts.tol);
    report.circles = detect_circles(a, opts.grid);
    report.flats = flat_portions(a, opts.grid, opts.gap_tol);
    report.reducibility = reducibility(a);
    if (a.dim() == 3) {
        try {
            report.shape_3x3 = classify_3x3(a, opts.tol);
        } catch (const NotTriangularError&) {
        } catch (const ReducibleInputError&) {
        }
    }
    for (int k : opts.ks) report.rank_ranges.push_back(rank_k_range(a, k, opts.grid, opts.tol));
    return report;
}

RangeReport analyze(const PisomSpec& spec, const AnalyzeOptions& opts) {
    RangeReport report = analyze(build(spec), opts);

    const NilpotentDim5* dim5 = std::get_if<NilpotentDim5>(&spec);
    NilpotentDim5 from_exceptional(0.0, 0.0);
    if (const ExceptionalDim5* exc = std::get_if<ExceptionalDim5>(&spec)) {
        from_exceptional = exceptional_as_dim5(*exc);
        dim5 = &from_exceptional;
    }
    if (dim5 != nullptr) {
        report.criterion_5x5 = circularity_criterion_5x5(*dim5);
        // The printed criterion: irreducible iff bcst != 0, or exactly one
        // of b and t vanishes. Recorded verbatim; the computed commutant
        // verdict in `reducibility` disagrees at (b,t) = (1,0) and (0,1).
        const bool bcst_nonzero = dim5->b * dim5->c * dim5->s * dim5->t != 0.0;
        const bool one_zero = (dim5->b == 0.0) != (dim5->t == 0.0);
        report.statement_irreducible = bcst_nonzero || one_zero;
    }
    return report;
}

}  // namespace nrpi

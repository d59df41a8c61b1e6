#include "nrpi/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "nrpi/analysis.hpp"

namespace nrpi {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[1024];
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return std::string(buf);
}

// Disk radii of the 5x5 nilpotent family on the b*c*s*t = 0 locus.
double radius_plus(const NilpotentDim5& s) {
    const double inner = s.b * s.b + s.c * s.c * s.t * s.t;
    return 0.5 * std::sqrt((3.0 + std::sqrt(5.0 - 4.0 * inner)) / 2.0);
}
double radius_minus(const NilpotentDim5& s) {
    const double inner = s.b * s.b + s.c * s.c * s.t * s.t;
    return 0.5 * std::sqrt((3.0 - std::sqrt(5.0 - 4.0 * inner)) / 2.0);
}

// Support of a rank-k region in direction theta.
double region_support(const RankKRange& r, double theta) {
    const Complex dir = std::polar(1.0, -theta);
    if (r.verdict == RankKRange::Verdict::SinglePoint) return (dir * r.point).real();
    double h = -std::numeric_limits<double>::infinity();
    for (const Complex& v : r.vertices) h = std::max(h, (dir * v).real());
    return h;
}

struct Failures {
    int count = 0;
    std::string first;
    void add(const std::string& msg) {
        if (count == 0) first = msg;
        ++count;
    }
    std::string summary(const std::string& ok) const {
        if (count == 0) return ok;
        return fmt("%d failure(s); first: %s", count, first.c_str());
    }
};

// --- check 1 -----------------------------------------------------------

CheckResult check_constants() {
    const ExceptionalConstants k = exceptional_constants();
    const double res_p = std::abs(((k.c_plus - 2.0) * k.c_plus - 1.0) * k.c_plus + 1.0);
    const double res_m = std::abs(((k.c_minus + 2.0) * k.c_minus - 1.0) * k.c_minus - 1.0);
    const bool pass = std::abs(k.c_plus - 0.55495) < 1e-5 && std::abs(k.c_minus - 0.80193) < 1e-5 &&
                      res_p <= 1e-12 && res_m <= 1e-12;
    return {1, "c-constants", "exceptional constants c+ and c-", pass,
            fmt("c_plus=%.12g vs 0.55495, c_minus=%.12g vs 0.80193, cubic residuals %.3g / %.3g",
                k.c_plus, k.c_minus, res_p, res_m)};
}

// --- check 2 -----------------------------------------------------------

CheckResult check_spectrum() {
    const ComplexMatrix a = build(ExceptionalDim5(ExcSign::plus, 0.0));
    const std::vector<double> ev = hermitian_eigen(re_part(a)).values;
    const double expected[5] = {0.62348, 0.62348, -0.12348, -0.36660, -0.75688};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(ev[i] - expected[i]));
    const double top_gap = ev[0] - ev[1];
    const bool pass = worst <= 1e-4 && top_gap <= 1e-6;
    return {2, "spectrum-5x5", "repeated extreme eigenvalue of the + exceptional matrix", pass,
            fmt("eigs=(%.7g, %.7g, %.7g, %.7g, %.7g), max dev %.3g, top gap %.3g", ev[0], ev[1],
                ev[2], ev[3], ev[4], worst, top_gap)};
}

// --- check 3 -----------------------------------------------------------

CheckResult check_flat_portion() {
    const std::vector<FlatPortion> plus = flat_portions(build(ExceptionalDim5(ExcSign::plus, 0.0)));
    const std::vector<FlatPortion> minus =
        flat_portions(build(ExceptionalDim5(ExcSign::minus, 0.0)));

    const Complex hi(0.62349, 0.08077), lo(0.62349, -0.08077);
    bool found = false;
    double err = -1.0;
    for (const FlatPortion& p : plus) {
        const double e = std::max(std::min(std::abs(p.endpoints[0] - hi), std::abs(p.endpoints[0] - lo)),
                                  std::min(std::abs(p.endpoints[1] - hi), std::abs(p.endpoints[1] - lo)));
        if (std::abs(p.endpoints[0] - p.endpoints[1]) > 1e-6 && e <= 1e-3) {
            found = true;
            err = e;
        }
    }
    const bool pass = found && minus.empty();
    return {3, "flat-portion", "flat boundary segment of the + exceptional matrix only", pass,
            fmt("+: %zu portion(s), endpoint dev %.3g vs 0.62349 +- 0.08077i; -: %zu portion(s)",
                plus.size(), err, minus.size())};
}

// --- check 4 -----------------------------------------------------------

CheckResult check_noncircular() {
    const ComplexMatrix a = build(NilpotentDim5(0.5, 0.5));
    const std::vector<double> re = hermitian_eigen(re_part(a)).values;
    const std::vector<double> im = hermitian_eigen(im_part(a)).values;
    const std::optional<double> disk = circular_disk_test(a);
    const CircleSet circles = detect_circles(a);

    double top_circle = 0.0;
    for (double r : circles.radii) top_circle = std::max(top_circle, r);
    const bool pass = std::abs(re.front() - 0.75) <= 1e-4 && std::abs(re.back() + 0.79435) <= 1e-4 &&
                      std::abs(im.front() - 0.77482) <= 1e-4 &&
                      std::abs(im.back() + 0.77482) <= 1e-4 && !disk.has_value() &&
                      top_circle <= 1e-9;
    return {4, "noncircular-5x5", "non-circular disk look-alike at b = t = 1/2", pass,
            fmt("Re extremes %.7g / %.7g vs 0.75 / -0.79435, Im extremes +-%.7g vs 0.77482, "
                "disk=%s, largest circle %.3g",
                re.front(), re.back(), im.front(), disk ? "yes" : "none", top_circle)};
}

// --- check 5 -----------------------------------------------------------

CheckResult check_circularity_criterion() {
    Failures fails;
    const int grid = 64;

    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 20; ++j) {
            const NilpotentDim5 spec(i / 21.0, j / 21.0);
            if (circularity_criterion_5x5(spec).circular)
                fails.add(fmt("criterion true at interior b=%g t=%g", spec.b, spec.t));
            else if (circular_disk_test(build(spec), grid).has_value())
                fails.add(fmt("disk verdict at interior b=%g t=%g", spec.b, spec.t));
        }

    std::vector<NilpotentDim5> edge;
    for (int i = 1; i <= 20; ++i) {
        const double v = i / 21.0;
        edge.push_back(NilpotentDim5(0.0, v));
        edge.push_back(NilpotentDim5(1.0, v));
        edge.push_back(NilpotentDim5(v, 0.0));
        edge.push_back(NilpotentDim5(v, 1.0));
    }
    edge.push_back(NilpotentDim5(0.0, 0.0));
    edge.push_back(NilpotentDim5(0.0, 1.0));
    edge.push_back(NilpotentDim5(1.0, 0.0));
    edge.push_back(NilpotentDim5(1.0, 1.0));

    for (const NilpotentDim5& spec : edge) {
        const double rp = radius_plus(spec), rm = radius_minus(spec);
        const ComplexMatrix a = build(spec);
        const CircularityCriterion5 crit = circularity_criterion_5x5(spec);
        if (!crit.circular || !crit.radius || std::abs(*crit.radius - rp) > 1e-12) {
            fails.add(fmt("criterion radius off at b=%g t=%g", spec.b, spec.t));
            continue;
        }
        const std::optional<double> disk = circular_disk_test(a, grid);
        if (!disk || std::abs(*disk - rp) > 1e-8) {
            fails.add(fmt("disk radius %.12g vs %.12g at b=%g t=%g", disk ? *disk : -1.0, rp,
                          spec.b, spec.t));
            continue;
        }
        std::vector<double> nonzero;
        for (double r : detect_circles(a, grid).radii)
            if (r > 1e-9) nonzero.push_back(r);
        if (nonzero.size() != 2 || std::abs(nonzero[0] - rm) > 1e-8 ||
            std::abs(nonzero[1] - rp) > 1e-8) {
            fails.add(fmt("circle radii count %zu at b=%g t=%g", nonzero.size(), spec.b, spec.t));
            continue;
        }
        const double top = hermitian_eigen(re_part(a)).values.front();
        if (std::abs(top - rp) > 1e-8)
            fails.add(fmt("eigensolve oracle %.12g vs %.12g at b=%g t=%g", top, rp, spec.b, spec.t));
    }

    return {5, "circularity-criterion", "disk iff b c s t = 0 across the parameter square",
            fails.count == 0,
            fails.summary("400 interior points non-circular; 84 edge points give radii r-, r+")};
}

// --- check 6 -----------------------------------------------------------

CheckResult check_kipp_coeffs() {
    Failures fails;
    double worst = 0.0;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            const NilpotentDim5 s(i / 6.0, j / 6.0);
            const ComplexMatrix a = build(s);
            for (double theta : grid_thetas(8)) {
                const RealPolynomial p = kippenhahn_coeffs(a, theta);
                const double expected[6] = {
                    (1.0 / 16.0) * s.b * s.c * s.s * s.t * std::cos(theta),
                    (1.0 / 16.0) * (s.c * s.c * s.t * s.t + s.b * s.b + 1.0),
                    0.0,
                    -0.75,
                    0.0,
                    1.0};
                for (int d = 0; d <= 5; ++d) {
                    const double dev = std::abs(p.coeffs[d] - expected[d]);
                    worst = std::max(worst, dev);
                    if (dev > 1e-10)
                        fails.add(fmt("coeff %d dev %.3g at b=%g t=%g theta=%.6g", d, dev, s.b,
                                      s.t, theta));
                }
            }
        }
    return {6, "kipp-coeffs", "quintic support polynomial coefficients across (b, t, theta)",
            fails.count == 0, fails.summary(fmt("max coefficient deviation %.3g", worst))};
}

// --- check 7 -----------------------------------------------------------

CheckResult check_nil4_disk() {
    Failures fails;
    double worst_spec = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const NilpotentDim4 spec(i / 20.0);
        const ComplexMatrix a = build(spec);
        const double rp = 0.5 * std::sqrt(1.0 + spec.c);
        const double rm = 0.5 * std::sqrt(1.0 - spec.c);
        const double expected[4] = {rp, rm, -rm, -rp};

        for (double theta : grid_thetas(64)) {
            const std::vector<double> ev = hermitian_eigen(re_part(rotate(a, theta))).values;
            for (int j = 0; j < 4; ++j) {
                const double dev = std::abs(ev[j] - expected[j]);
                worst_spec = std::max(worst_spec, dev);
                if (dev > 1e-10)
                    fails.add(fmt("eig dev %.3g at b=%g theta=%.6g", dev, spec.b, theta));
            }
        }
        const std::optional<double> disk = circular_disk_test(a, 64);
        if (!disk || std::abs(*disk - rp) > 1e-8)
            fails.add(fmt("disk radius %.12g vs %.12g at b=%g", disk ? *disk : -1.0, rp, spec.b));
        if (i == 0 && disk && std::abs(*disk - std::numbers::sqrt2 / 2.0) > 1e-8)
            fails.add(fmt("b=0 radius %.12g vs sqrt(2)/2", *disk));
    }
    return {7, "nil4-disk", "4x4 nilpotent family: rotation-invariant spectrum and disk radius",
            fails.count == 0,
            fails.summary(fmt("spectrum dev %.3g; disk radius matches (1/2)sqrt(1+c)", worst_spec))};
}

// --- check 8 -----------------------------------------------------------

CheckResult check_genericity() {
    Failures fails;

    for (int i = 1; i <= 9; ++i) {
        const GenericityReport g = genericity(build(NilpotentDim4(i / 10.0)));
        if (!g.generic) fails.add(fmt("4x4 b=%g flagged non-generic (gap %.3g)", i / 10.0, g.min_gap));
    }

    const ExceptionalConstants k = exceptional_constants();
    const double bp = std::sqrt(1.0 - k.c_plus * k.c_plus);
    const double bm = std::sqrt(1.0 - k.c_minus * k.c_minus);
    detail::SplitMix64 rng{0x67e3a1c5u};
    int accepted = 0;
    while (accepted < 50) {
        const double b = rng.uniform01();
        const double t = rng.uniform01();
        if (std::hypot(b - bp, t - k.t_plus) < 0.05 || std::hypot(b - bm, t - k.t_minus) < 0.05)
            continue;
        ++accepted;
        const GenericityReport g = genericity(build(NilpotentDim5(b, t)));
        if (!g.generic) fails.add(fmt("5x5 b=%.6g t=%.6g flagged non-generic (gap %.3g)", b, t, g.min_gap));
    }

    for (ExcSign sign : {ExcSign::plus, ExcSign::minus})
        for (double phi : {0.0, 1.0, 2.5}) {
            const GenericityReport g = genericity(build(ExceptionalDim5(sign, phi)));
            if (g.generic)
                fails.add(fmt("exceptional %s phi=%g not flagged (gap %.3g)",
                              sign == ExcSign::plus ? "+" : "-", phi, g.min_gap));
        }

    return {8, "genericity", "strict eigenvalue ordering everywhere except the two exceptions",
            fails.count == 0,
            fails.summary("9 rank-two + 50 random rank-three generic; 6 exceptional non-generic")};
}

// --- check 9 -----------------------------------------------------------

CheckResult check_classify() {
    Failures fails;
    detail::SplitMix64 rng{0x51a2b3c4u};
    auto draw = [&]() {
        return std::polar(0.9 * rng.uniform01(), 2.0 * kPi * rng.uniform01());
    };

    for (int i = 0; i < 100; ++i) {
        const Complex l1 = draw();
        Complex l2;
        if (i % 4 == 0)
            l2 = l1;
        else if (i % 4 == 1)
            l2 = -l1;
        else
            l2 = draw();

        const Classification3x3 cls = classify_3x3(build(Rank2Dim3(l1, l2)));
        const bool expect_ell = std::abs(l1 - l2) <= 1e-9 || std::abs(l1 + l2) <= 1e-9;
        if (cls.verdict == Classification3x3::Verdict::FlatPortion) {
            fails.add(fmt("sample %d classified FlatPortion", i));
            continue;
        }
        const bool got_ell = cls.verdict == Classification3x3::Verdict::EllipticalDisk;
        if (got_ell != expect_ell) {
            fails.add(fmt("sample %d elliptical=%d expected %d", i, got_ell, expect_ell));
            continue;
        }
        if (got_ell) {
            const Complex fa = std::abs(l1 + l2) <= 1e-9 ? l1 : Complex(0.0);
            const Complex fb = std::abs(l1 + l2) <= 1e-9 ? l2 : l1;
            const double match =
                std::min(std::abs(cls.foci[0] - fa) + std::abs(cls.foci[1] - fb),
                         std::abs(cls.foci[0] - fb) + std::abs(cls.foci[1] - fa));
            if (match > 1e-9) fails.add(fmt("sample %d foci off by %.3g", i, match));
        }
    }

    const ComplexMatrix ovular =
        build(Rank2Dim3(0.5 * std::sqrt(3.5), 0.25));
    if (classify_3x3(ovular).verdict != Classification3x3::Verdict::Ovular)
        fails.add("printed ovular example not classified Ovular");

    return {9, "classify-3x3", "elliptical disk exactly at lambda2 = +-lambda1; ovular otherwise",
            fails.count == 0, fails.summary("100 samples + printed ovular example classified")};
}

// --- check 10 ----------------------------------------------------------

CheckResult check_rank_k() {
    Failures fails;
    const int grid = 720;

    auto check_disk_polygon = [&](const ComplexMatrix& a, int k, double expect_r,
                                  const char* label) {
        const RankKRange r = rank_k_range(a, k, grid);
        if (r.verdict != RankKRange::Verdict::Polygon) {
            fails.add(fmt("%s: expected polygon", label));
            return;
        }
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (double theta : grid_thetas(grid)) {
            const double h = region_support(r, theta);
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        if (hi - lo > 1e-6) fails.add(fmt("%s: support varies by %.3g", label, hi - lo));
        if (std::abs(hi - expect_r) > 1e-6)
            fails.add(fmt("%s: support %.12g vs %.12g", label, hi, expect_r));
    };

    const NilpotentDim4 s4(0.5);
    const ComplexMatrix a4 = build(s4);
    check_disk_polygon(a4, 2, 0.5 * std::sqrt(1.0 - s4.c), "4x4 k=2");
    if (rank_k_range(a4, 3, grid).verdict != RankKRange::Verdict::EmptySet)
        fails.add("4x4 k=3 not empty");

    const NilpotentDim5 s5(0.0, 0.0);
    const ComplexMatrix a5 = build(s5);
    check_disk_polygon(a5, 2, radius_minus(s5), "5x5 k=2");
    const RankKRange r3 = rank_k_range(a5, 3, grid);
    if (r3.verdict != RankKRange::Verdict::SinglePoint || std::abs(r3.point) > 1e-6)
        fails.add("5x5 k=3 not the origin point");
    if (rank_k_range(a5, 4, grid).verdict != RankKRange::Verdict::EmptySet)
        fails.add("5x5 k=4 not empty");

    return {10, "rank-k", "higher-rank ranges: disk polygons, origin point, empty set",
            fails.count == 0,
            fails.summary("k=2 disks at r-, k=3 verdicts, k=4 empty as published")};
}

// --- check 11 ----------------------------------------------------------

CheckResult check_reducibility() {
    Failures fails;

    struct Case {
        double b, t;
        bool reducible;
        const char* label;
    };
    const Case cases[] = {
        {0.0, 0.5, false, "b=0 interior t"},  {0.5, 0.0, false, "t=0 interior b"},
        {1.0, 0.5, true, "b=1 interior t"},   {0.5, 1.0, true, "t=1 interior b"},
        {0.0, 0.0, true, "corner (0,0)"},     {0.0, 1.0, true, "corner (0,1)"},
        {1.0, 0.0, true, "corner (1,0)"},     {1.0, 1.0, true, "corner (1,1)"},
    };

    for (const Case& c : cases) {
        const ComplexMatrix a = build(NilpotentDim5(c.b, c.t));
        const ReducibilityReport rep = reducibility(a);
        if (rep.reducible != c.reducible) {
            fails.add(fmt("%s: reducible=%d expected %d (commutant dim %d)", c.label,
                          rep.reducible, c.reducible, rep.commutant_dim));
            continue;
        }
        if (!c.reducible) {
            if (rep.commutant_dim != 1)
                fails.add(fmt("%s: commutant dim %d expected 1", c.label, rep.commutant_dim));
            continue;
        }
        if (!rep.projector) {
            fails.add(fmt("%s: no projector witness", c.label));
            continue;
        }
        const ComplexMatrix& p = *rep.projector;
        const double herm = detail::hermitian_deviation(p);
        const double idem = (p * p - p).frobenius_norm();
        const double comm = (p * a - a * p).frobenius_norm();
        const double tr = p.trace().real();
        const int rank = static_cast<int>(std::lround(tr));
        if (herm > 1e-10 || idem > 1e-8 || std::abs(tr - rank) > 1e-6 || rank < 1 ||
            rank > a.dim() - 1 || comm > 1e-8 * (1.0 + a.frobenius_norm()))
            fails.add(fmt("%s: witness defect herm=%.3g idem=%.3g comm=%.3g rank=%d", c.label,
                          herm, idem, comm, rank));
    }

    return {11, "reducibility-table", "commutant verdicts across the parameter-square cases",
            fails.count == 0,
            fails.summary("interior edges irreducible; b=1, t=1 lines and corners reducible "
                          "with projector witnesses")};
}

// --- check 12 ----------------------------------------------------------

CheckResult check_properties() {
    Failures fails;

    // Rotation covariance: boundary(e^{i phi} A) is the rotated, index-shifted
    // boundary of A when phi is a whole number of grid steps.
    {
        const ComplexMatrix a = build(NilpotentDim5(0.3, 0.7));
        const int m = 360, shift = 30;
        const double phi = 2.0 * kPi * shift / m;
        const BoundaryCurve base = boundary(a, m);
        const BoundaryCurve rot = boundary(rotate(a, -phi), m);
        const Complex w = std::polar(1.0, phi);
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            worst = std::max(worst,
                             std::abs(rot.points[i] - w * base.points[(i - shift + m) % m]));
        if (worst > 1e-8) fails.add(fmt("rotation covariance dev %.3g", worst));
    }

    // Translation: boundary(A + zI) = boundary(A) + z.
    {
        const ComplexMatrix a = build(NilpotentDim4(0.7));
        const int m = 120;
        for (const Complex z : {Complex(0.3, -0.2), Complex(-1.0, 2.0)}) {
            ComplexMatrix shifted = a;
            for (int i = 0; i < a.dim(); ++i) shifted(i, i) += z;
            const BoundaryCurve base = boundary(a, m);
            const BoundaryCurve moved = boundary(shifted, m);
            double worst = 0.0;
            for (int i = 0; i < m; ++i)
                worst = std::max(worst, std::abs(moved.points[i] - base.points[i] - z));
            if (worst > 1e-8) fails.add(fmt("translation dev %.3g", worst));
        }
    }

    // Support-function consistency between sweep and boundary.
    {
        const ComplexMatrix a = build(NilpotentDim5(0.5, 0.5));
        const int m = 360;
        const SupportSweep s = sweep(a, m);
        const BoundaryCurve c = boundary(a, m);
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            const Complex dir = std::polar(1.0, -s.thetas[i]);
            worst = std::max(worst, std::abs((dir * c.points[i]).real() - s.eigs[i][0]));
        }
        if (worst > 1e-9) fails.add(fmt("support consistency dev %.3g", worst));
    }

    // Nesting of the rank-k ranges.
    {
        const int m = 240;
        auto check_nested = [&](const ComplexMatrix& a, int kmax, const char* label) {
            RankKRange outer = rank_k_range(a, 1, m);
            for (int k = 2; k <= kmax; ++k) {
                const RankKRange inner = rank_k_range(a, k, m);
                if (inner.verdict == RankKRange::Verdict::EmptySet) break;
                for (double theta : grid_thetas(m)) {
                    if (region_support(inner, theta) > region_support(outer, theta) + 1e-9) {
                        fails.add(fmt("%s: level %d not nested", label, k));
                        break;
                    }
                }
                outer = inner;
            }
        };
        check_nested(build(NilpotentDim5(0.0, 0.0)), 3, "5x5 nesting");
        check_nested(build(NilpotentDim4(0.5)), 2, "4x4 nesting");
    }

    // Defining identity A A* A = A across the families.
    {
        std::vector<PisomSpec> catalog;
        catalog.push_back(Rank2Dim3(Complex(0.3, 0.2), Complex(-0.5, 0.0)));
        catalog.push_back(Rank2Dim3(Complex(0.5, 0.0), Complex(0.5, 0.0)));
        for (double b : {0.0, 0.3, 1.0}) catalog.push_back(NilpotentDim4(b));
        catalog.push_back(NilpotentDim5(0.0, 0.0));
        catalog.push_back(NilpotentDim5(0.5, 0.5));
        catalog.push_back(NilpotentDim5(1.0, 1.0));
        catalog.push_back(NilpotentDim5(0.3, 0.9));
        for (ExcSign sign : {ExcSign::plus, ExcSign::minus})
            for (double phi : {0.0, 2.0}) catalog.push_back(ExceptionalDim5(sign, phi));
        {
            ComplexMatrix bb(2), cc(2);
            bb(0, 0) = 1.0;
            bb(1, 1) = 0.6;
            cc(0, 1) = 0.8;
            catalog.push_back(RawBlocks(bb, cc));
        }
        for (const PisomSpec& spec : catalog)
            if (!validate_partial_isometry(build(spec)))
                fails.add(fmt("family member %d fails A A* A = A", spec_dim(spec)));
    }

    // Seeded generator: determinism, the defining identity, and the rank.
    {
        const ComplexMatrix a1 = random_partial_isometry(5, 3, 7);
        const ComplexMatrix a2 = random_partial_isometry(5, 3, 7);
        if (a1.entries() != a2.entries()) fails.add("seeded generator not deterministic");
        if (!validate_partial_isometry(a1)) fails.add("seeded generator output not a partial isometry");
        const std::vector<double> sv = hermitian_eigen(a1.adjoint() * a1).values;
        for (int i = 0; i < 3; ++i)
            if (std::abs(sv[i] - 1.0) > 1e-9) fails.add(fmt("singular value %d = %.12g", i, sv[i]));
        for (int i = 3; i < 5; ++i)
            if (sv[i] > 1e-9) fails.add(fmt("singular value %d = %.3g not 0", i, sv[i]));

        const std::vector<double> sv4 = hermitian_eigen(
            random_partial_isometry(4, 2, 1).adjoint() * random_partial_isometry(4, 2, 1)).values;
        if (std::abs(sv4[1] - 1.0) > 1e-9 || sv4[2] > 1e-9) fails.add("4x4 rank-2 spectrum off");
    }

    return {12, "property-suites",
            "covariance, support consistency, nesting, defining identity, determinism",
            fails.count == 0, fails.summary("all property batteries hold at stated tolerances")};
}

}  // namespace

std::vector<std::string> reproduction_ids() {
    return {"c-constants",   "spectrum-5x5", "flat-portion", "noncircular-5x5",
            "circularity-criterion", "kipp-coeffs",  "nil4-disk",    "genericity",
            "classify-3x3",  "rank-k",       "reducibility-table", "property-suites"};
}

std::vector<CheckResult> run_reproduction_suite(const std::vector<std::string>& only_ids) {
    using Runner = std::function<CheckResult()>;
    const std::pair<const char*, Runner> table[] = {
        {"c-constants", check_constants},
        {"spectrum-5x5", check_spectrum},
        {"flat-portion", check_flat_portion},
        {"noncircular-5x5", check_noncircular},
        {"circularity-criterion", check_circularity_criterion},
        {"kipp-coeffs", check_kipp_coeffs},
        {"nil4-disk", check_nil4_disk},
        {"genericity", check_genericity},
        {"classify-3x3", check_classify},
        {"rank-k", check_rank_k},
        {"reducibility-table", check_reducibility},
        {"property-suites", check_properties},
    };

    std::vector<CheckResult> results;
    for (const auto& [id, runner] : table) {
        if (!only_ids.empty() &&
            std::find(only_ids.begin(), only_ids.end(), id) == only_ids.end())
            continue;
        results.push_back(runner());
    }
    return results;
}

}  // namespace nrpi

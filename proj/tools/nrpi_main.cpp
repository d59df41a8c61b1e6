// Command-line front end: construct family members, validate the partial
// isometry identity, run the analysis verdicts, emit boundary data and SVG
// plots, and run the built-in reproduction checks.
//
// Output is a pure function of (argv, input files): numbers print as %.12g
// (or shortest round-trip form under --exact), never localized, never
// colored. Exit codes: 0 success, 1 internal/check failure, 2 usage or
// validation error. Every error path prints one `error: ...` line to stderr.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nrpi/analysis.hpp"
#include "nrpi/reproduce.hpp"

namespace {

using nrpi::Complex;
using nrpi::ComplexMatrix;
using json = nlohmann::json;

struct CliError : std::runtime_error {
    int code;
    CliError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

// ---- deterministic number formatting ------------------------------------

struct Fmt {
    bool exact = false;

    std::string num(double x) const {
        if (x == 0.0) x = 0.0;  // fold -0 into 0
        char buf[64];
        if (exact) {
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
            (void)ec;
            return std::string(buf, end);
        }
        const int len = std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf, buf + len);
    }
    // JSON has no inf/nan literals.
    std::string jnum(double x) const { return std::isfinite(x) ? num(x) : "null"; }
    std::string cplx(Complex z) const { return "[" + num(z.real()) + ", " + num(z.imag()) + "]"; }
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// ---- input parsing -------------------------------------------------------

const json& need(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw CliError(2, where + ": missing field \"" + key + "\"");
    return *it;
}

double need_number(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number()) throw CliError(2, where + ": field \"" + key + "\" must be a number");
    return v.get<double>();
}

int need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer())
        throw CliError(2, where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

Complex parse_complex(const json& v, const std::string& where) {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex(v[0].get<double>(), v[1].get<double>());
    if (v.is_object() && v.contains("re") && v.contains("im") && v["re"].is_number() &&
        v["im"].is_number())
        return Complex(v["re"].get<double>(), v["im"].get<double>());
    throw CliError(2, where + ": expected a number or an [re, im] pair");
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_object())
        throw CliError(2, where + ": expected an object {\"n\": ..., \"entries\": [...]}");
    const json& nj = need(j, "n", where);
    if (!nj.is_number_integer() || nj.get<int>() < 1 || nj.get<int>() > 256)
        throw CliError(2, where + ": \"n\" must be an integer in 1..256");
    const int n = nj.get<int>();
    const json& ej = need(j, "entries", where);
    if (!ej.is_array() || ej.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw CliError(2, where + ": \"entries\" must list " + std::to_string(n) + "*" +
                              std::to_string(n) + " row-major values");
    std::vector<Complex> entries;
    entries.reserve(ej.size());
    for (const json& v : ej) entries.push_back(parse_complex(v, where + " entry"));
    return ComplexMatrix(n, std::move(entries));
}

struct ParsedInput {
    std::optional<nrpi::PisomSpec> spec;  // set when --spec named a family member
    std::optional<ComplexMatrix> matrix;  // always set on success
};

ParsedInput load_input(const std::string& spec_str, const std::string& matrix_file,
                       std::optional<std::uint64_t> seed) {
    if (spec_str.empty() == matrix_file.empty())
        throw CliError(2, "provide exactly one of --spec and --matrix-file");
    ParsedInput in;
    try {
        if (!matrix_file.empty()) {
            std::ifstream f(matrix_file);
            if (!f) throw CliError(2, "cannot open matrix file: " + matrix_file);
            in.matrix = parse_matrix(json::parse(f), "matrix file");
            return in;
        }

        const json j = json::parse(spec_str);
        if (!j.is_object()) throw CliError(2, "spec: expected a JSON object");
        const json& vj = need(j, "variant", "spec");
        if (!vj.is_string()) throw CliError(2, "spec: \"variant\" must be a string");
        const std::string variant = vj.get<std::string>();
        const std::string where = "spec " + variant;

        if (variant == "Rank2Dim3") {
            in.spec = nrpi::Rank2Dim3(parse_complex(need(j, "lambda1", where), where + ".lambda1"),
                                      parse_complex(need(j, "lambda2", where), where + ".lambda2"));
        } else if (variant == "NilpotentDim4") {
            in.spec = nrpi::NilpotentDim4(need_number(j, "b", where));
        } else if (variant == "NilpotentDim5") {
            in.spec = nrpi::NilpotentDim5(need_number(j, "b", where), need_number(j, "t", where));
        } else if (variant == "ExceptionalDim5") {
            const json& sj = need(j, "sign", where);
            const std::string sign = sj.is_string() ? sj.get<std::string>() : std::string();
            nrpi::ExcSign sgn;
            if (sign == "+" || sign == "plus")
                sgn = nrpi::ExcSign::plus;
            else if (sign == "-" || sign == "minus")
                sgn = nrpi::ExcSign::minus;
            else
                throw CliError(2, where + ": \"sign\" must be \"+\" or \"-\"");
            double phi = 0.0;
            if (const auto it = j.find("phi"); it != j.end()) {
                if (!it->is_number()) throw CliError(2, where + ": field \"phi\" must be a number");
                phi = it->get<double>();
            }
            in.spec = nrpi::ExceptionalDim5(sgn, phi);
        } else if (variant == "RawBlocks") {
            in.spec = nrpi::RawBlocks(parse_matrix(need(j, "b_block", where), where + ".b_block"),
                                      parse_matrix(need(j, "c_block", where), where + ".c_block"));
        } else if (variant == "Random") {
            const int n = need_int(j, "n", where);
            const int rank = need_int(j, "rank", where);
            std::uint64_t s = 0;
            if (const auto it = j.find("seed"); it != j.end()) s = it->get<std::uint64_t>();
            if (seed) s = *seed;
            in.matrix = nrpi::random_partial_isometry(n, rank, s);
            return in;
        } else {
            throw CliError(2, "spec: unknown variant \"" + variant +
                                  "\" (expected Rank2Dim3, NilpotentDim4, NilpotentDim5, "
                                  "ExceptionalDim5, RawBlocks, or Random)");
        }
        in.matrix = nrpi::build(*in.spec);
        return in;
    } catch (const CliError&) {
        throw;
    } catch (const json::exception& e) {
        throw CliError(2, std::string("invalid JSON input: ") + e.what());
    } catch (const nrpi::Error& e) {
        // Anything the constructors reject is a bad input, not an internal fault.
        throw CliError(2, e.what());
    }
}

// ---- serializers ----------------------------------------------------------

std::string matrix_fields(const ComplexMatrix& a, const Fmt& fmt) {
    std::string s = "\"n\": " + std::to_string(a.dim()) + ", \"entries\": [";
    const std::vector<Complex>& e = a.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ", ";
        s += fmt.cplx(e[i]);
    }
    return s + "]";
}

std::string matrix_json(const ComplexMatrix& a, const Fmt& fmt) {
    return "{" + matrix_fields(a, fmt) + "}";
}

std::string rank_range_fields(const nrpi::RankKRange& r, const Fmt& fmt) {
    std::string s = "\"k\": " + std::to_string(r.k) + ", \"verdict\": \"";
    switch (r.verdict) {
        case nrpi::RankKRange::Verdict::EmptySet: s += "EmptySet"; break;
        case nrpi::RankKRange::Verdict::SinglePoint: s += "SinglePoint"; break;
        case nrpi::RankKRange::Verdict::Polygon: s += "Polygon"; break;
    }
    s += "\"";
    if (r.verdict == nrpi::RankKRange::Verdict::SinglePoint)
        s += ", \"point\": " + fmt.cplx(r.point);
    if (r.verdict == nrpi::RankKRange::Verdict::Polygon) {
        s += ", \"vertices\": [";
        for (std::size_t i = 0; i < r.vertices.size(); ++i) {
            if (i) s += ", ";
            s += fmt.cplx(r.vertices[i]);
        }
        s += "]";
    }
    return s;
}

std::string report_json(const nrpi::RangeReport& r, const Fmt& fmt) {
    std::string s = "{\"dim\": " + std::to_string(r.dim);
    s += ", \"partial_isometry\": ";
    s += bool_str(r.partial_isometry);

    s += ", \"generic\": ";
    s += bool_str(r.genericity.generic);
    s += ", \"min_gap\": " + fmt.jnum(r.genericity.min_gap);
    s += ", \"witness_theta\": " +
         (r.genericity.witness_theta ? fmt.jnum(*r.genericity.witness_theta) : "null");
    s += ", \"witness_level\": " +
         (r.genericity.witness_level ? std::to_string(*r.genericity.witness_level) : "null");

    s += ", \"circular\": ";
    s += bool_str(r.disk_radius.has_value());
    s += ", \"radius\": " + (r.disk_radius ? fmt.jnum(*r.disk_radius) : "null");
    s += ", \"circles\": [";
    for (std::size_t i = 0; i < r.circles.radii.size(); ++i) {
        if (i) s += ", ";
        s += fmt.jnum(r.circles.radii[i]);
    }
    s += "]";

    s += ", \"flat_portions\": [";
    for (std::size_t i = 0; i < r.flats.size(); ++i) {
        const nrpi::FlatPortion& p = r.flats[i];
        if (i) s += ", ";
        s += "{\"direction\": " + fmt.jnum(p.direction) +
             ", \"support\": " + fmt.jnum(p.support_value) + ", \"endpoints\": [" +
             fmt.cplx(p.endpoints[0]) + ", " + fmt.cplx(p.endpoints[1]) + "]}";
    }
    s += "]";

    s += ", \"reducible\": ";
    s += bool_str(r.reducibility.reducible);
    s += ", \"commutant_dim\": " + std::to_string(r.reducibility.commutant_dim);
    if (r.reducibility.projector)
        s += ", \"projector\": " + matrix_json(*r.reducibility.projector, fmt);

    if (r.shape_3x3) {
        const nrpi::Classification3x3& c = *r.shape_3x3;
        s += ", \"shape_3x3\": {\"verdict\": \"";
        switch (c.verdict) {
            case nrpi::Classification3x3::Verdict::EllipticalDisk: s += "EllipticalDisk"; break;
            case nrpi::Classification3x3::Verdict::Ovular: s += "Ovular"; break;
            case nrpi::Classification3x3::Verdict::FlatPortion: s += "FlatPortion"; break;
            case nrpi::Classification3x3::Verdict::LineSegment: s += "LineSegment"; break;
        }
        s += "\", \"lambda_star\": " + fmt.cplx(c.lambda_star);
        if (c.verdict == nrpi::Classification3x3::Verdict::EllipticalDisk)
            s += ", \"foci\": [" + fmt.cplx(c.foci[0]) + ", " + fmt.cplx(c.foci[1]) + "]";
        s += "}";
    }

    if (r.criterion_5x5) {
        s += ", \"criterion_5x5\": {\"circular\": ";
        s += bool_str(r.criterion_5x5->circular);
        s += ", \"radius\": " +
             (r.criterion_5x5->radius ? fmt.jnum(*r.criterion_5x5->radius) : "null");
        s += "}";
    }
    if (r.statement_irreducible) {
        s += ", \"statement_irreducible\": ";
        s += bool_str(*r.statement_irreducible);
    }

    s += ", \"rank_k\": [";
    for (std::size_t i = 0; i < r.rank_ranges.size(); ++i) {
        if (i) s += ", ";
        s += "{" + rank_range_fields(r.rank_ranges[i], fmt) + "}";
    }
    s += "]}";
    return s;
}

std::string boundary_csv(const nrpi::BoundaryCurve& c, const Fmt& fmt) {
    std::string s = "theta,re,im\n";
    for (std::size_t i = 0; i < c.points.size(); ++i)
        s += fmt.num(c.thetas[i]) + "," + fmt.num(c.points[i].real()) + "," +
             fmt.num(c.points[i].imag()) + "\n";
    return s;
}

std::string boundary_json(const nrpi::BoundaryCurve& c, const Fmt& fmt) {
    std::string s = "{\"closed\": ";
    s += bool_str(c.closed);
    s += ", \"thetas\": [";
    for (std::size_t i = 0; i < c.thetas.size(); ++i) {
        if (i) s += ", ";
        s += fmt.jnum(c.thetas[i]);
    }
    s += "], \"points\": [";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        if (i) s += ", ";
        s += fmt.cplx(c.points[i]);
    }
    return s + "]}";
}

std::string sweep_csv(const nrpi::SupportSweep& sw, const Fmt& fmt) {
    std::string s = "theta";
    for (int j = 1; j <= sw.matrix_dim; ++j) s += ",lambda_" + std::to_string(j);
    s += "\n";
    for (std::size_t i = 0; i < sw.thetas.size(); ++i) {
        s += fmt.num(sw.thetas[i]);
        for (double v : sw.eigs[i]) s += "," + fmt.num(v);
        s += "\n";
    }
    return s;
}

std::string sweep_json(const nrpi::SupportSweep& sw, const Fmt& fmt) {
    std::string s = "{\"dim\": " + std::to_string(sw.matrix_dim) + ", \"thetas\": [";
    for (std::size_t i = 0; i < sw.thetas.size(); ++i) {
        if (i) s += ", ";
        s += fmt.jnum(sw.thetas[i]);
    }
    s += "], \"eigs\": [";
    for (std::size_t i = 0; i < sw.eigs.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < sw.eigs[i].size(); ++j) {
            if (j) s += ", ";
            s += fmt.jnum(sw.eigs[i][j]);
        }
        s += "]";
    }
    return s + "]}";
}

// Fixed 800x800 viewbox, data range padded 10%, curve as one path element,
// axis lines, optional endpoint markers.
std::string svg_scene(const std::vector<Complex>& curve, const std::vector<Complex>& markers,
                      bool close_path) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto grow = [&](Complex z) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
    };
    for (Complex z : curve) grow(z);
    for (Complex z : markers) grow(z);
    if (!(xmin <= xmax)) {  // nothing to draw: pick a neutral frame
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    double half = 0.5 * std::max(xmax - xmin, ymax - ymin);
    half = half > 0.0 ? half * 1.1 : 1.0;

    auto px = [&](double x) { return 400.0 + 400.0 * (x - cx) / half; };
    auto py = [&](double y) { return 400.0 - 400.0 * (y - cy) / half; };
    auto coord = [](double v) {
        char buf[40];
        const int len = std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf, buf + len);
    };

    std::string s =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
    s += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    s += "<line x1=\"0\" y1=\"" + coord(py(0.0)) + "\" x2=\"800\" y2=\"" + coord(py(0.0)) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + coord(px(0.0)) + "\" y1=\"0\" x2=\"" + coord(px(0.0)) +
         "\" y2=\"800\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (!curve.empty()) {
        s += "<path d=\"M";
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (i) s += " L";
            s += " " + coord(px(curve[i].real())) + " " + coord(py(curve[i].imag()));
        }
        if (close_path) s += " Z";
        s += "\" fill=\"none\" stroke=\"#16537e\" stroke-width=\"2\"/>\n";
    }
    for (Complex z : markers)
        s += "<circle cx=\"" + coord(px(z.real())) + "\" cy=\"" + coord(py(z.imag())) +
             "\" r=\"5\" fill=\"#c0392b\"/>\n";
    s += "</svg>\n";
    return s;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliError(2, "cannot open output file: " + out_path);
    f << content;
    if (!f) throw CliError(1, "failed writing output file: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges of low-dimensional partial isometries"};
    app.require_subcommand(1);

    std::string spec_str, matrix_file, format, out_path;
    int grid = nrpi::kDefaultGrid;
    double tol = nrpi::kDefaultTol;
    std::uint64_t seed_val = 0;
    int k_single = 1;
    std::vector<int> ks;
    std::vector<std::string> only_ids;
    bool exact = false, as_json = false;

    const std::string spec_help =
        "inline spec JSON, e.g. {\"variant\":\"NilpotentDim5\",\"b\":0.5,\"t\":0.5}";

    auto add_common = [&](CLI::App* sub, bool with_matrix) {
        sub->add_option("--spec", spec_str, spec_help);
        if (with_matrix)
            sub->add_option("--matrix-file", matrix_file,
                            "path to a matrix JSON file {\"n\": ..., \"entries\": [[re, im], ...]}");
        sub->add_option("--seed", seed_val, "seed override for the Random spec variant");
        sub->add_flag("--exact", exact, "print numbers in shortest round-trip form");
        sub->add_option("--out", out_path, "write to this file instead of stdout");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid", grid, "angle grid size (>= 8)")->check(CLI::Range(8, 1 << 20));
    };

    CLI::App* c_construct =
        app.add_subcommand("construct", "build a family member, print matrix JSON and validator verdict");
    add_common(c_construct, false);
    c_construct->get_option("--spec")->required();

    CLI::App* c_validate =
        app.add_subcommand("validate", "check the defining identity A A* A = A");
    add_common(c_validate, true);
    c_validate->add_option("--tol", tol, "relative tolerance for the identity");

    CLI::App* c_analyze = app.add_subcommand(
        "analyze", "full verdict report: genericity, disks, flat portions, reducibility, rank-k");
    add_common(c_analyze, true);
    add_grid(c_analyze);
    c_analyze->add_option("--tol", tol, "verdict tolerance");
    c_analyze->add_option("--k", ks, "rank-k ranges to include (repeatable)");

    CLI::App* c_boundary =
        app.add_subcommand("boundary", "boundary curve of the numerical range");
    add_common(c_boundary, true);
    add_grid(c_boundary);
    c_boundary->add_option("--format", format, "csv (default), json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "eigenvalues of Re(e^{-i theta} A) across the angle grid");
    add_common(c_sweep, true);
    add_grid(c_sweep);
    c_sweep->add_option("--format", format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* c_rank = app.add_subcommand("rank-range", "rank-k numerical range");
    add_common(c_rank, true);
    add_grid(c_rank);
    c_rank->add_option("--tol", tol, "classification tolerance");
    c_rank->add_option("--k", k_single, "rank parameter k (default 1)");
    c_rank->add_option("--format", format, "json (default), csv, or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    CLI::App* c_constants =
        app.add_subcommand("constants", "exceptional parameter constants of the 5x5 family");
    c_constants->add_flag("--exact", exact, "print numbers in shortest round-trip form");
    c_constants->add_option("--out", out_path, "write to this file instead of stdout");

    CLI::App* c_repro = app.add_subcommand("reproduce", "run the built-in reproduction checks");
    c_repro->add_option("--only", only_ids, "run only the named checks (repeatable)");
    c_repro->add_flag("--json", as_json, "machine-readable results array");
    c_repro->add_option("--out", out_path, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    const Fmt fmt{exact};

    try {
        if (c_construct->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_construct->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, "", seed);
            emit(out_path, "{" + matrix_fields(*in.matrix, fmt) + ", \"partial_isometry\": " +
                               bool_str(nrpi::validate_partial_isometry(*in.matrix)) + "}\n");
            return 0;
        }

        if (c_validate->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_validate->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, matrix_file, seed);
            const ComplexMatrix& a = *in.matrix;
            const double defect = (a * a.adjoint() * a - a).frobenius_norm();
            emit(out_path, "{\"n\": " + std::to_string(a.dim()) + ", \"partial_isometry\": " +
                               bool_str(nrpi::validate_partial_isometry(a, tol)) +
                               ", \"defect\": " + fmt.jnum(defect) +
                               ", \"tol\": " + fmt.jnum(tol) + "}\n");
            return 0;
        }

        if (c_analyze->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_analyze->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, matrix_file, seed);
            const int n = in.matrix->dim();
            for (int k : ks)
                if (k < 1 || k > n)
                    throw CliError(2, "analyze: --k must lie in 1.." + std::to_string(n) +
                                          " for this input");
            nrpi::AnalyzeOptions opts;
            opts.grid = grid;
            opts.tol = tol;
            opts.ks = ks;
            const nrpi::RangeReport rep =
                in.spec ? nrpi::analyze(*in.spec, opts) : nrpi::analyze(*in.matrix, opts);
            emit(out_path, report_json(rep, fmt) + "\n");
            return 0;
        }

        if (c_boundary->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_boundary->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, matrix_file, seed);
            const nrpi::BoundaryCurve curve = nrpi::boundary(*in.matrix, grid);
            if (format.empty() || format == "csv") {
                emit(out_path, boundary_csv(curve, fmt));
            } else if (format == "json") {
                emit(out_path, boundary_json(curve, fmt) + "\n");
            } else {
                std::vector<Complex> markers;
                for (const nrpi::FlatPortion& p : nrpi::flat_portions(*in.matrix, grid)) {
                    markers.push_back(p.endpoints[0]);
                    markers.push_back(p.endpoints[1]);
                }
                emit(out_path, svg_scene(curve.points, markers, true));
            }
            return 0;
        }

        if (c_sweep->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_sweep->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, matrix_file, seed);
            const nrpi::SupportSweep sw = nrpi::sweep(*in.matrix, grid);
            if (format == "json")
                emit(out_path, sweep_json(sw, fmt) + "\n");
            else
                emit(out_path, sweep_csv(sw, fmt));
            return 0;
        }

        if (c_rank->parsed()) {
            std::optional<std::uint64_t> seed;
            if (c_rank->count("--seed")) seed = seed_val;
            const ParsedInput in = load_input(spec_str, matrix_file, seed);
            const int n = in.matrix->dim();
            if (k_single < 1 || k_single > n)
                throw CliError(2, "rank-range: --k must lie in 1.." + std::to_string(n) +
                                      " for this input");
            const nrpi::RankKRange r = nrpi::rank_k_range(*in.matrix, k_single, grid, tol);
            if (format == "csv") {
                std::string s = "re,im\n";
                if (r.verdict == nrpi::RankKRange::Verdict::SinglePoint)
                    s += fmt.num(r.point.real()) + "," + fmt.num(r.point.imag()) + "\n";
                for (Complex v : r.vertices)
                    s += fmt.num(v.real()) + "," + fmt.num(v.imag()) + "\n";
                emit(out_path, s);
            } else if (format == "svg") {
                std::vector<Complex> markers;
                if (r.verdict == nrpi::RankKRange::Verdict::SinglePoint)
                    markers.push_back(r.point);
                emit(out_path, svg_scene(r.vertices, markers, true));
            } else {
                emit(out_path, "{" + rank_range_fields(r, fmt) + "}\n");
            }
            return 0;
        }

        if (c_constants->parsed()) {
            const nrpi::ExceptionalConstants k = nrpi::exceptional_constants();
            emit(out_path, "{\"alpha\": " + fmt.num(k.alpha) + ", \"c_plus\": " +
                               fmt.num(k.c_plus) + ", \"c_minus\": " + fmt.num(k.c_minus) +
                               ", \"t_plus\": " + fmt.num(k.t_plus) +
                               ", \"t_minus\": " + fmt.num(k.t_minus) + "}\n");
            return 0;
        }

        if (c_repro->parsed()) {
            const std::vector<std::string> known = nrpi::reproduction_ids();
            for (const std::string& id : only_ids)
                if (std::find(known.begin(), known.end(), id) == known.end())
                    throw CliError(2, "unknown check id \"" + id + "\"");
            const std::vector<nrpi::CheckResult> results = nrpi::run_reproduction_suite(only_ids);
            int passed = 0;
            for (const nrpi::CheckResult& r : results) passed += r.pass ? 1 : 0;

            std::string s;
            if (as_json) {
                s = "[";
                for (std::size_t i = 0; i < results.size(); ++i) {
                    const nrpi::CheckResult& r = results[i];
                    if (i) s += ", ";
                    s += "{\"number\": " + std::to_string(r.number) + ", \"id\": \"" +
                         json_escape(r.id) + "\", \"name\": \"" + json_escape(r.name) +
                         "\", \"pass\": ";
                    s += bool_str(r.pass);
                    s += ", \"detail\": \"" + json_escape(r.detail) + "\"}";
                }
                s += "]\n";
            } else {
                for (const nrpi::CheckResult& r : results) {
                    std::string line = r.pass ? "PASS " : "FAIL ";
                    if (r.number < 10) line += ' ';
                    line += std::to_string(r.number) + "  " + r.id;
                    line.append(r.id.size() < 24 ? 24 - r.id.size() : std::size_t{1}, ' ');
                    line += r.detail + "\n";
                    s += line;
                }
                s += std::to_string(passed) + "/" + std::to_string(results.size()) +
                     " checks passed\n";
            }
            emit(out_path, s);
            return passed == static_cast<int>(results.size()) ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zonedet/error.hpp"
#include "zonedet/expansion.hpp"
#include "zonedet/generators.hpp"
#include "zonedet/matrix_market.hpp"
#include "zonedet/oracle.hpp"
#include "zonedet/spai.hpp"

namespace zonedet::cli {

namespace {

using nlohmann::json;

std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

std::string sci(std::optional<double> v) { return v ? sci(*v) : std::string(); }

json json_or_null(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularBlock: return kSingularBlock;
        case ErrorCode::CholeskyBreakdown: return kCholeskyBreakdown;
        case ErrorCode::DenseCapExceeded: return kDenseCapExceeded;
        case ErrorCode::InvalidArgument:
        case ErrorCode::PartitionMismatch: return kUsage;
        default: return kFailure;
    }
}

/// Magnitude of a log-determinant with its principal phase.
double log_magnitude(const LogDet& l) { return std::abs(Complex(l.ln_abs, l.principal_phase())); }

struct GenerateArgs {
    std::string kind;
    generators::GeneratorSpec spec;
    std::string alpha = "0";
    std::string output;
};

struct ZoneArgs {
    std::string matrix;
    Index block_size = 0;
    std::vector<Index> offsets;
    int order = 1;
    std::string rho = "auto";
    bool exact = false;
    std::string format = "csv";
    double pivot_tol = kDefaultPivotTol;
    double memory_factor = 64.0;
};

struct SpaiArgs {
    std::string matrix;
    int level = 1;
    Index cap = kDefaultPatternCap;
    bool exact = false;
    std::string format = "text";
};

struct ExactArgs {
    std::string matrix;
    std::string format = "text";
};

int cmd_generate(GenerateArgs& a, std::ostream& out) {
    a.spec.kind = generators::parse_kind(a.kind);
    a.spec.alpha = generators::parse_complex(a.alpha);
    const SparseMatrix m = generators::generate(a.spec);
    const std::string provenance = "zonedet generate " + a.spec.describe();
    if (a.output.empty() || a.output == "-") {
        write_matrix_market(out, m, {provenance});
        return kOk;
    }
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + a.output + "'");
    write_matrix_market(file, m, {provenance});
    file.close();
    if (!file) throw Error(ErrorCode::InvalidArgument, "failed writing '" + a.output + "'");
    out << "n = " << m.order() << '\n'
        << "nnz = " << m.nnz() << '\n'
        << "hermitian = " << (is_hermitian(m, 1e-12) ? "true" : "false") << '\n'
        << "provenance = " << provenance << '\n';
    return kOk;
}

RhoOptions parse_rho(const std::string& spec) {
    RhoOptions r;
    if (spec == "auto") r.mode = RhoMode::automatic;
    else if (spec == "power") r.mode = RhoMode::power;
    else if (spec == "gersh" || spec == "gerschgorin") r.mode = RhoMode::gerschgorin;
    else if (spec == "hermitian") r.mode = RhoMode::hermitian;
    else if (spec == "none") r.mode = RhoMode::none;
    else if (spec.rfind("value:", 0) == 0) {
        r.mode = RhoMode::user_supplied;
        try {
            std::size_t used = 0;
            r.user_value = std::stod(spec.substr(6), &used);
            if (used != spec.size() - 6) throw std::invalid_argument(spec);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "cannot parse rho value in '" + spec + "'");
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown --rho '" + spec + "'");
    }
    return r;
}

int cmd_zone(const ZoneArgs& a, std::ostream& out, std::ostream& err) {
    const SparseMatrix m = read_matrix_market_file(a.matrix);
    const BlockPartition partition =
        a.offsets.empty() ? BlockPartition::uniform(m.order(), a.block_size) : BlockPartition(a.offsets);

    ExpansionOptions opts;
    opts.order = a.order;
    opts.rho = parse_rho(a.rho);
    opts.pivot_tol = a.pivot_tol;
    opts.memory_factor = a.memory_factor;
    const ExpansionReport report = zone_expansion(m, partition, opts);

    std::optional<LogDet> exact;
    if (a.exact) {
        if (m.order() <= oracle::dense_cap()) exact = oracle::dense_lu_logdet(m);
        else err << "warning: order " << m.order() << " exceeds the dense cap; error columns left empty\n";
    }

    struct Row {
        int p;
        Complex delta;
        std::optional<Complex> trace;
        std::optional<double> abs_log, rel_det, tight;
        std::optional<double> abs_err, rel_err;
        bool skipped;
    };
    std::vector<Row> rows;
    for (int p = 0; p <= report.order; ++p) {
        Row row{p, report.deltas[static_cast<Index>(p)], {}, {}, {}, {}, {}, {}, false};
        if (p >= 1) row.trace = report.traces[static_cast<Index>(p - 1)];
        if (report.bounds_available()) {
            const auto& b = report.bounds[static_cast<Index>(p)];
            row.abs_log = b.abs_log;
            row.rel_det = b.rel_det;
            row.tight = b.tight_rel;
        }
        if (exact) {
            row.abs_err = log_distance(row.delta, exact->as_complex());
            const double mag = log_magnitude(*exact);
            if (mag > 0.0) row.rel_err = *row.abs_err / mag;
        }
        for (int s : report.skipped_orders) row.skipped = row.skipped || s == p;
        rows.push_back(row);
    }

    if (a.format == "csv") {
        out << "p,delta_re,delta_im,trace_re,trace_im,abs_log_bound,rel_det_bound,tight_rel_bound,abs_err,"
               "rel_err_logdet,skipped\n";
        for (const auto& r : rows) {
            out << r.p << ',' << sci(r.delta.real()) << ',' << sci(r.delta.imag()) << ','
                << (r.trace ? sci(r.trace->real()) : "") << ',' << (r.trace ? sci(r.trace->imag()) : "") << ','
                << sci(r.abs_log) << ',' << sci(r.rel_det) << ',' << sci(r.tight) << ',' << sci(r.abs_err) << ','
                << sci(r.rel_err) << ',' << (r.skipped ? 1 : 0) << '\n';
        }
    } else if (a.format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = report.n;
        j["order"] = report.order;
        j["blocks"] = partition.num_blocks();
        j["checkerboard"] = std::string(to_string(report.checkerboard));
        j["skipped_orders"] = report.skipped_orders;
        if (report.rho) {
            j["rho"] = {{"value", report.rho->value},
                        {"method", std::string(to_string(report.rho->method))},
                        {"converged", report.rho->converged},
                        {"iterations", report.rho->iterations}};
        } else {
            j["rho"] = nullptr;
        }
        j["lambda_min"] = json_or_null(report.lambda_min);
        j["c"] = json_or_null(report.c);
        j["exact"] = exact ? json{{"ln_abs", exact->ln_abs}, {"phase", exact->principal_phase()}} : json(nullptr);
        json jr = json::array();
        for (const auto& r : rows) {
            jr.push_back({{"p", r.p},
                          {"delta_re", r.delta.real()},
                          {"delta_im", r.delta.imag()},
                          {"trace_re", r.trace ? json(r.trace->real()) : json(nullptr)},
                          {"trace_im", r.trace ? json(r.trace->imag()) : json(nullptr)},
                          {"abs_log_bound", json_or_null(r.abs_log)},
                          {"rel_det_bound", json_or_null(r.rel_det)},
                          {"tight_rel_bound", json_or_null(r.tight)},
                          {"abs_err", json_or_null(r.abs_err)},
                          {"rel_err_logdet", json_or_null(r.rel_err)},
                          {"skipped", r.skipped}});
        }
        j["rows"] = jr;
        out << j.dump(2) << '\n';
    } else {
        out << "order n         " << report.n << '\n'
            << "blocks          " << partition.num_blocks() << '\n'
            << "checkerboard    " << to_string(report.checkerboard) << '\n';
        if (report.rho) {
            out << "rho             " << sci(report.rho->value) << " (" << to_string(report.rho->method)
                << (report.rho->converged ? "" : ", not converged") << ")\n";
        }
        if (report.c) out << "c               " << sci(*report.c) << '\n';
        if (exact) out << "ln det (exact)  " << sci(exact->ln_abs) << " + " << sci(exact->principal_phase()) << "i\n";
        out << '\n'
            << std::setw(3) << "p" << std::setw(18) << "Re delta" << std::setw(18) << "Im delta" << std::setw(18)
            << "c rho^p" << std::setw(18) << "abs err" << std::setw(18) << "rel err" << '\n';
        for (const auto& r : rows) {
            out << std::setw(3) << r.p << std::setw(18) << sci(r.delta.real()) << std::setw(18)
                << sci(r.delta.imag()) << std::setw(18) << (r.abs_log ? sci(*r.abs_log) : "-") << std::setw(18)
                << (r.abs_err ? sci(*r.abs_err) : "-") << std::setw(18) << (r.rel_err ? sci(*r.rel_err) : "-")
                << (r.skipped ? "  skipped" : "") << '\n';
        }
    }

    if (opts.rho.mode != RhoMode::none && !report.bounds_available()) {
        err << "rho = " << (report.rho ? sci(report.rho->value) : std::string("?"))
            << " is not below 1; error bounds are unavailable\n";
        return kRhoNotLessThanOne;
    }
    return kOk;
}

int cmd_spai(const SpaiArgs& a, std::ostream& out) {
    const SparseMatrix m = read_matrix_market_file(a.matrix);
    const auto pattern = lower_neighbor_pattern(m, a.level, a.cap);
    const auto result = spai_logdet(m, pattern);
    const auto diag = hadamard_product_logdet(m);
    const double n = static_cast<double>(m.order());

    std::optional<LogDet> exact;
    if (a.exact) exact = oracle::dense_lu_logdet(m);

    auto rel_ln = [&](const LogDet& approx) { return log_distance(approx, *exact) / log_magnitude(*exact); };
    auto rel_root = [&](const LogDet& approx) { return std::abs(std::expm1((approx.ln_abs - exact->ln_abs) / n)); };

    if (a.format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = m.order();
        j["level"] = a.level;
        j["cap"] = a.cap;
        j["ln_sigma"] = result.logdet.ln_abs;
        j["ln_diag_product"] = diag.logdet.ln_abs;
        j["nonpositive_diagonal"] = diag.nonpositive_diagonal;
        if (exact) {
            j["ln_det_exact"] = exact->ln_abs;
            j["rel_err_ln_sigma"] = rel_ln(result.logdet);
            j["rel_err_root_sigma"] = rel_root(result.logdet);
            j["rel_err_ln_diag_product"] = rel_ln(diag.logdet);
            j["rel_err_root_diag_product"] = rel_root(diag.logdet);
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "n = " << m.order() << '\n'
        << "level = " << a.level << '\n'
        << "ln_sigma = " << sci(result.logdet.ln_abs) << '\n'
        << "ln_diag_product = " << sci(diag.logdet.ln_abs) << '\n';
    if (exact) {
        out << "ln_det_exact = " << sci(exact->ln_abs) << '\n'
            << "rel_err_ln_sigma = " << sci(rel_ln(result.logdet)) << '\n'
            << "rel_err_root_sigma = " << sci(rel_root(result.logdet)) << '\n'
            << "rel_err_ln_diag_product = " << sci(rel_ln(diag.logdet)) << '\n'
            << "rel_err_root_diag_product = " << sci(rel_root(diag.logdet)) << '\n';
    }
    return kOk;
}

int cmd_exact(const ExactArgs& a, std::ostream& out) {
    const SparseMatrix m = read_matrix_market_file(a.matrix);
    const LogDet ld = oracle::dense_lu_logdet(m);
    std::optional<Complex> det;
    if (std::abs(ld.ln_abs) < 700.0) det = ld.value();
    if (a.format == "json") {
        json j{{"schema", 1}, {"n", m.order()}, {"ln_abs", ld.ln_abs}, {"principal_phase", ld.principal_phase()}};
        j["det"] = det ? json{{"re", det->real()}, {"im", det->imag()}} : json(nullptr);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "n = " << m.order() << '\n'
        << "ln_abs = " << sci(ld.ln_abs) << '\n'
        << "principal_phase = " << sci(ld.principal_phase()) << '\n';
    if (det) {
        out << "det = " << sci(det->real()) << (det->imag() < 0 ? " - " : " + ") << sci(std::abs(det->imag()))
            << "i\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zone determinant expansion and sparse-inverse determinant approximations", "zonedet"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a test matrix in Matrix Market format");
    g->add_option("--kind", gen.kind,
                  "laplacian2d | toeplitz | block_t3 | checkerboard | hpd_random | diag_dominant_random | example2x2")
        ->required();
    g->add_option("--m", gen.spec.m, "Laplacian grid side");
    g->add_option("--n", gen.spec.n, "Order (toeplitz, block_t3, hpd_random, diag_dominant_random)");
    g->add_option("--a", gen.spec.a, "Toeplitz diagonal")->capture_default_str();
    g->add_option("--b", gen.spec.b, "Toeplitz off-diagonal")->capture_default_str();
    g->add_option("--k", gen.spec.k, "Checkerboard zone count (even)");
    g->add_option("--block-size", gen.spec.block_size, "Checkerboard zone size");
    g->add_option("--coupling", gen.spec.coupling_scale, "Checkerboard coupling scale");
    g->add_option("--dominance", gen.spec.dominance, "hpd_random diagonal shift");
    g->add_option("--margin", gen.spec.margin, "diag_dominant_random row margin");
    g->add_option("--alpha", gen.alpha, "example2x2 off-diagonal, e.g. 0+0.5i");
    g->add_option("--seed", gen.spec.seed, "Seed for random kinds");
    g->add_option("-o,--output", gen.output, "Output file (default: standard output)");

    ZoneArgs zone;
    auto* z = app.add_subcommand("zone", "Zone determinant expansion with error bounds");
    z->add_option("--matrix", zone.matrix, "Matrix Market file")->required();
    auto* bs = z->add_option("--block-size", zone.block_size, "Uniform block size");
    auto* bo = z->add_option("--block-offsets", zone.offsets, "Block offsets 0,...,n")->delimiter(',');
    bs->excludes(bo);
    z->add_option("--order", zone.order, "Highest expansion order")->capture_default_str()->check(CLI::NonNegativeNumber);
    z->add_option("--rho", zone.rho, "auto | power | gersh | hermitian | none | value:<x>")->capture_default_str();
    z->add_flag("--exact", zone.exact, "Add error columns from the dense LU reference");
    z->add_option("--format", zone.format, "csv | json | text")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json", "text"}));
    z->add_option("--pivot-tol", zone.pivot_tol, "Relative singularity guard for block LU")->capture_default_str();
    z->add_option("--memory-factor", zone.memory_factor, "nnz cap per power as a multiple of nnz(M)")
        ->capture_default_str();

    SpaiArgs spai;
    auto* s = app.add_subcommand("spai", "Sparse inverse determinant approximation (Hermitian positive-definite)");
    s->add_option("--matrix", spai.matrix, "Matrix Market file")->required();
    s->add_option("--level", spai.level, "Neighbourhood level")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--cap", spai.cap, "Maximum pattern size")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_flag("--exact", spai.exact, "Compare with the dense LU reference");
    s->add_option("--format", spai.format, "text | json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

    ExactArgs ex;
    auto* e = app.add_subcommand("exact", "Log-determinant by dense LU with partial pivoting");
    e->add_option("--matrix", ex.matrix, "Matrix Market file")->required();
    e->add_option("--format", ex.format, "text | json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& pe) {
        err << "error: " << pe.what() << '\n';
        return kUsage;
    }

    if (*z && zone.offsets.empty() && zone.block_size == 0) {
        err << "error: zone needs --block-size or --block-offsets\n";
        return kUsage;
    }

    try {
        if (*g) return cmd_generate(gen, out);
        if (*z) return cmd_zone(zone, out, err);
        if (*s) return cmd_spai(spai, out);
        if (*e) return cmd_exact(ex, out);
    } catch (const Error& error) {
        err << "error: " << error.what() << '\n';
        return exit_code_for(error.code());
    } catch (const std::exception& other) {
        err << "error: " << other.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace zonedet::cli

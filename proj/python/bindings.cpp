#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zonedet/bounds.hpp"
#include "zonedet/error.hpp"
#include "zonedet/expansion.hpp"
#include "zonedet/generators.hpp"
#include "zonedet/matrix_market.hpp"
#include "zonedet/oracle.hpp"
#include "zonedet/spai.hpp"

namespace py = pybind11;
using namespace zonedet;

namespace {

SparseMatrix from_lists(Index n, const std::vector<Index>& rows, const std::vector<Index>& cols,
                        const std::vector<Complex>& values) {
    if (rows.size() != cols.size() || rows.size() != values.size()) {
        throw Error(ErrorCode::InvalidArgument, "rows, cols and values must have equal length");
    }
    std::vector<Triplet> t(rows.size());
    for (Index k = 0; k < t.size(); ++k) t[k] = {rows[k], cols[k], values[k]};
    return SparseMatrix::from_entries(n, t);
}

py::tuple to_tuple(const LogDet& l) { return py::make_tuple(l.ln_abs, l.principal_phase()); }

RhoMode parse_rho_mode(const std::string& mode) {
    if (mode == "auto") return RhoMode::automatic;
    if (mode == "power") return RhoMode::power;
    if (mode == "gersh" || mode == "gerschgorin") return RhoMode::gerschgorin;
    if (mode == "hermitian") return RhoMode::hermitian;
    if (mode == "value") return RhoMode::user_supplied;
    if (mode == "none") return RhoMode::none;
    throw Error(ErrorCode::InvalidArgument, "unknown rho mode '" + mode + "'");
}

py::dict report_to_dict(const ExpansionReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["order"] = r.order;
    d["block_logdet"] = to_tuple(r.block_logdet);
    d["deltas"] = r.deltas;
    d["traces"] = r.traces;
    d["checkerboard"] = std::string(to_string(r.checkerboard));
    d["skipped_orders"] = r.skipped_orders;
    if (r.rho) {
        d["rho"] = r.rho->value;
        d["rho_method"] = std::string(to_string(r.rho->method));
    } else {
        d["rho"] = py::none();
        d["rho_method"] = py::none();
    }
    d["lambda_min"] = r.lambda_min ? py::cast(*r.lambda_min) : py::none();
    d["c"] = r.c ? py::cast(*r.c) : py::none();
    py::list bounds;
    for (const auto& b : r.bounds) {
        py::dict row;
        row["abs_log"] = b.abs_log;
        row["rel_det"] = b.rel_det;
        row["tight_rel"] = b.tight_rel ? py::cast(*b.tight_rel) : py::none();
        bounds.append(row);
    }
    d["bounds"] = bounds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zone determinant expansion and sparse-inverse log-determinant approximations";

    static py::exception<Error> zonedet_error(m, "ZonedetError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(zonedet_error, e.what());
        }
    });

    py::class_<SparseMatrix>(m, "SparseMatrix")
        .def(py::init(&from_lists), py::arg("n"), py::arg("rows"), py::arg("cols"), py::arg("values"),
             "Build from 0-based coordinate lists; duplicates are summed.")
        .def_static("identity", &SparseMatrix::identity, py::arg("n"))
        .def_property_readonly("order", &SparseMatrix::order)
        .def_property_readonly("nnz", &SparseMatrix::nnz)
        .def("at", &SparseMatrix::at, py::arg("row"), py::arg("col"))
        .def("entries",
             [](const SparseMatrix& s) {
                 std::vector<std::tuple<Index, Index, Complex>> out;
                 for (const auto& e : s.entries()) out.emplace_back(e.row, e.col, e.value);
                 return out;
             })
        .def("is_hermitian", [](const SparseMatrix& s, double tol) { return is_hermitian(s, tol); },
             py::arg("tol") = 1e-12)
        .def("__eq__", [](const SparseMatrix& a, const SparseMatrix& b) { return a == b; })
        .def("__repr__", [](const SparseMatrix& s) {
            return "<SparseMatrix order=" + std::to_string(s.order()) + " nnz=" + std::to_string(s.nnz()) + ">";
        });

    m.def("read_matrix_market", py::overload_cast<std::string_view>(&read_matrix_market), py::arg("text"));
    m.def("read_matrix_market_file", &read_matrix_market_file, py::arg("path"));
    m.def("write_matrix_market",
          py::overload_cast<const SparseMatrix&, const std::vector<std::string>&>(&write_matrix_market),
          py::arg("matrix"), py::arg("comments") = std::vector<std::string>{});

    m.def(
        "zone_expansion",
        [](const SparseMatrix& mat, std::optional<Index> block_size, std::optional<std::vector<Index>> offsets,
           int order, const std::string& rho, double rho_value) {
            if (block_size.has_value() == offsets.has_value()) {
                throw Error(ErrorCode::InvalidArgument, "give exactly one of block_size and offsets");
            }
            const auto partition =
                offsets ? BlockPartition(*offsets) : BlockPartition::uniform(mat.order(), *block_size);
            ExpansionOptions opts;
            opts.order = order;
            opts.rho.mode = parse_rho_mode(rho);
            opts.rho.user_value = rho_value;
            return report_to_dict(zone_expansion(mat, partition, opts));
        },
        py::arg("matrix"), py::arg("block_size") = py::none(), py::arg("offsets") = py::none(), py::arg("order") = 1,
        py::arg("rho") = "auto", py::arg("rho_value") = 0.0);

    m.def(
        "spai_logdet",
        [](const SparseMatrix& mat, int level, Index cap) {
            const auto r = spai_logdet(mat, lower_neighbor_pattern(mat, level, cap));
            py::dict d;
            d["ln_sigma"] = r.logdet.ln_abs;
            d["sigmas"] = r.sigmas;
            d["pattern_sizes"] = r.pattern_sizes;
            return d;
        },
        py::arg("matrix"), py::arg("level") = 1, py::arg("cap") = kDefaultPatternCap);
    m.def(
        "hadamard_logdet", [](const SparseMatrix& mat) { return hadamard_product_logdet(mat).logdet.ln_abs; },
        py::arg("matrix"));
    m.def(
        "dense_logdet", [](const SparseMatrix& mat) { return to_tuple(oracle::dense_lu_logdet(mat)); },
        py::arg("matrix"), "(ln|det|, principal phase) by dense LU.");

    m.def("bound_constant", &bound_constant, py::arg("n"), py::arg("rho"));
    m.def("log_error_bound", &log_error_bound, py::arg("n"), py::arg("rho"), py::arg("order"));
    m.def("pinching_bound_real", &pinching_bound_real, py::arg("n"), py::arg("rho"), py::arg("lambda_min"));

    auto gen = m.def_submodule("generators", "Test matrix families");
    gen.def("laplacian_2d", &generators::laplacian_2d, py::arg("m"));
    gen.def("laplacian_2d_logdet_exact", &generators::laplacian_2d_logdet_exact, py::arg("m"));
    gen.def("toeplitz_tridiag", &generators::toeplitz_tridiag, py::arg("n"), py::arg("a") = 2.0, py::arg("b") = -1.0);
    gen.def("toeplitz_logdet_exact", &generators::toeplitz_logdet_exact, py::arg("n"), py::arg("a") = 2.0,
            py::arg("b") = -1.0);
    gen.def("block_t3", &generators::block_t3, py::arg("n"));
    gen.def("random_checkerboard", &generators::random_checkerboard, py::arg("k"), py::arg("block_size"),
            py::arg("coupling_scale"), py::arg("seed"));
    gen.def("hpd_random", &generators::hpd_random, py::arg("n"), py::arg("seed"), py::arg("dominance"));
    gen.def("diag_dominant_random", &generators::diag_dominant_random, py::arg("n"), py::arg("seed"),
            py::arg("margin"));
    gen.def("example_2x2", &generators::example_2x2, py::arg("alpha"));

#ifdef ZONEDET_VERSION
    m.attr("__version__") = ZONEDET_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}

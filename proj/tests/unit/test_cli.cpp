#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "zonedet/generators.hpp"
#include "zonedet/matrix_market.hpp"

using namespace zonedet;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "zonedet");
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

/// Temporary Matrix Market file removed on scope exit.
class TempMatrix {
public:
    explicit TempMatrix(const SparseMatrix& m, const std::string& name) {
        path_ = fs::temp_directory_path() / ("zonedet_cli_" + name + ".mtx");
        std::ofstream(path_) << write_matrix_market(m);
    }
    ~TempMatrix() { fs::remove(path_); }
    [[nodiscard]] std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("generate writes a readable file with provenance") {
    const fs::path path = fs::temp_directory_path() / "zonedet_cli_generate.mtx";
    const auto r = run({"generate", "--kind", "toeplitz", "--n", "10", "-o", path.string()});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("n = 10") != std::string::npos);
    CHECK(r.out.find("hermitian = true") != std::string::npos);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("% zonedet generate toeplitz") != std::string::npos);
    CHECK(read_matrix_market(text.str()) == generators::toeplitz_tridiag(10, 2.0, -1.0));
    fs::remove(path);

    const auto to_stdout = run({"generate", "--kind", "example2x2", "--alpha", "0+0.5i"});
    CHECK(read_matrix_market(to_stdout.out) == generators::example_2x2(Complex(0, 0.5)));
}

TEST_CASE("generate output is bit-identical across runs") {
    const std::vector<std::string> args = {"generate", "--kind", "checkerboard", "--k", "6", "--block-size", "3",
                                           "--coupling", "0.1", "--seed", "9"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("zone csv on the n = 900 Laplacian") {
    TempMatrix file(generators::laplacian_2d(30), "lap30");
    const auto r = run({"zone", "--matrix", file.path(), "--block-size", "30", "--order", "1", "--exact"});
    REQUIRE(r.status == cli::kOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] ==
          "p,delta_re,delta_im,trace_re,trace_im,abs_log_bound,rel_det_bound,tight_rel_bound,abs_err,rel_err_logdet,"
          "skipped");
    // p = 0 row: ten commas, rel_err_logdet is the tenth field
    std::vector<std::string> fields;
    std::istringstream row(rows[1]);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
    REQUIRE(fields.size() == 11);
    CHECK(fields[3].empty());
    CHECK(std::stod(fields[9]) == doctest::Approx(0.1150).epsilon(1e-3));
    CHECK(fields[1].find('e') != std::string::npos);
    CHECK(rows[2].back() == '1');  // p = 1 is skipped (odd checkerboard)
}

TEST_CASE("zone on identity and a checkerboard") {
    TempMatrix id(SparseMatrix::identity(6), "identity");
    const auto r = run({"zone", "--matrix", id.path(), "--block-size", "2", "--order", "2", "--format", "json"});
    REQUIRE(r.status == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    for (const auto& row : j["rows"]) CHECK(row["delta_re"].get<double>() == 0.0);

    TempMatrix cb(generators::random_checkerboard(6, 4, 0.1, 3), "checkerboard");
    const auto c = run({"zone", "--matrix", cb.path(), "--block-size", "4", "--order", "4", "--format", "json"});
    REQUIRE(c.status == cli::kOk);
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["checkerboard"] == "odd");
    CHECK(jc["skipped_orders"] == nlohmann::json::array({1, 3}));
    CHECK(jc["rows"][1]["skipped"] == true);
    CHECK(jc["rows"][2]["skipped"] == false);
}

TEST_CASE("zone accepts block offsets and rho value") {
    TempMatrix file(generators::toeplitz_tridiag(6, 4.0, -1.0), "offsets");
    const auto r = run({"zone", "--matrix", file.path(), "--block-offsets", "0,2,6", "--rho", "value:0.3",
                        "--format", "json"});
    REQUIRE(r.status == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["blocks"] == 2);
    CHECK(j["rho"]["method"] == "user_supplied");
    CHECK(j["rho"]["value"].get<double>() == 0.3);

    const auto text = run({"zone", "--matrix", file.path(), "--block-size", "3", "--format", "text"});
    CHECK(text.status == cli::kOk);
    CHECK(text.out.find("checkerboard") != std::string::npos);
}

TEST_CASE("exit codes") {
    TempMatrix two(generators::example_2x2(Complex(3, 0)), "alpha3");
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"zone", "--matrix", two.path()}).status == cli::kUsage);
    CHECK(run({"zone", "--matrix", two.path(), "--block-size", "1", "--rho", "bogus"}).status == cli::kUsage);
    CHECK(run({"zone", "--matrix", two.path(), "--block-size", "1", "--format", "xml"}).status == cli::kUsage);
    CHECK(run({"exact", "--matrix", "/nonexistent/file.mtx"}).status == cli::kFailure);

    const auto rho = run({"zone", "--matrix", two.path(), "--block-size", "1", "--order", "2", "--rho", "power"});
    CHECK(rho.status == cli::kRhoNotLessThanOne);
    CHECK(lines(rho.out).size() == 4);  // report still printed
    CHECK(run({"zone", "--matrix", two.path(), "--block-size", "1", "--rho", "none"}).status == cli::kOk);

    CHECK(run({"spai", "--matrix", two.path()}).status == cli::kCholeskyBreakdown);

    const Triplet singular[] = {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}, {3, 3, 1.0}};
    TempMatrix sb(SparseMatrix::from_entries(4, singular), "singular");
    CHECK(run({"zone", "--matrix", sb.path(), "--block-size", "2"}).status == cli::kSingularBlock);

    ::setenv("ZONEDET_DENSE_CAP", "1", 1);
    const auto capped = run({"exact", "--matrix", two.path()});
    ::unsetenv("ZONEDET_DENSE_CAP");
    CHECK(capped.status == cli::kDenseCapExceeded);
}

TEST_CASE("spai and exact reports") {
    TempMatrix file(generators::toeplitz_tridiag(100, 2.0, -1.0), "toeplitz100");
    const auto s = run({"spai", "--matrix", file.path(), "--format", "json"});
    REQUIRE(s.status == cli::kOk);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j["ln_sigma"].get<double>() == doctest::Approx(std::log(2.0) + 99 * std::log(1.5)));

    const auto e = run({"exact", "--matrix", file.path()});
    REQUIRE(e.status == cli::kOk);
    CHECK(e.out.find("ln_abs = 4.6151205168e+00") != std::string::npos);
    CHECK(e.out.find("det = 1.0100000000e+02") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("zone") != std::string::npos);
}

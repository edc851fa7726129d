#include "zonedet/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "zonedet/error.hpp"

namespace zonedet {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    Index i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        Index j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void parse_fail(Index line_no, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg, line_no);
}

template <typename T>
T parse_number(std::string_view tok, Index line_no) {
    T value{};
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line_no, "cannot parse number '" + std::string(tok) + "'");
    }
    return value;
}

enum class Field { real, complex };
enum class Symmetry { general, symmetric, hermitian };

}  // namespace

SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    Index line_no = 0;

    if (!std::getline(in, line)) parse_fail(1, "empty input");
    ++line_no;
    auto head = tokens(line);
    if (head.size() != 5 || lower(std::string(head[0])) != "%%matrixmarket") {
        parse_fail(line_no, "missing %%MatrixMarket header");
    }
    if (lower(std::string(head[1])) != "matrix") {
        throw Error(ErrorCode::UnsupportedFormat, "object '" + std::string(head[1]) + "' is not a matrix");
    }
    if (lower(std::string(head[2])) != "coordinate") {
        throw Error(ErrorCode::UnsupportedFormat, "only coordinate storage is supported");
    }
    const std::string field_name = lower(std::string(head[3]));
    Field field;
    if (field_name == "real" || field_name == "double" || field_name == "integer") field = Field::real;
    else if (field_name == "complex") field = Field::complex;
    else throw Error(ErrorCode::UnsupportedFormat, "field '" + field_name + "' is not supported");

    const std::string sym_name = lower(std::string(head[4]));
    Symmetry symmetry;
    if (sym_name == "general") symmetry = Symmetry::general;
    else if (sym_name == "symmetric") symmetry = Symmetry::symmetric;
    else if (sym_name == "hermitian") symmetry = Symmetry::hermitian;
    else throw Error(ErrorCode::UnsupportedFormat, "symmetry '" + sym_name + "' is not supported");

    std::vector<std::string_view> size_tokens;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        size_tokens = tokens(line);
        if (size_tokens.empty()) continue;
        break;
    }
    if (size_tokens.size() != 3) parse_fail(line_no, "expected size line 'rows cols nnz'");
    const auto rows = parse_number<Index>(size_tokens[0], line_no);
    const auto cols = parse_number<Index>(size_tokens[1], line_no);
    const auto nnz = parse_number<Index>(size_tokens[2], line_no);
    if (rows != cols) throw Error(ErrorCode::UnsupportedFormat, "matrix is not square");
    if (rows == 0) parse_fail(line_no, "matrix order must be positive");

    const Index expected_tokens = field == Field::complex ? 4 : 3;
    std::vector<Triplet> triplets;
    triplets.reserve(symmetry == Symmetry::general ? nnz : 2 * nnz);
    Index read = 0;
    while (read < nnz && std::getline(in, line)) {
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty() || tok[0].front() == '%') continue;
        if (tok.size() != expected_tokens) parse_fail(line_no, "wrong number of fields in entry");
        const auto r = parse_number<Index>(tok[0], line_no);
        const auto c = parse_number<Index>(tok[1], line_no);
        if (r < 1 || r > rows || c < 1 || c > cols) parse_fail(line_no, "index out of range");
        const double re = parse_number<double>(tok[2], line_no);
        const double im = field == Field::complex ? parse_number<double>(tok[3], line_no) : 0.0;
        const Complex v(re, im);
        triplets.push_back({r - 1, c - 1, v});
        if (r != c) {
            if (symmetry == Symmetry::symmetric) triplets.push_back({c - 1, r - 1, v});
            else if (symmetry == Symmetry::hermitian) triplets.push_back({c - 1, r - 1, std::conj(v)});
        }
        ++read;
    }
    if (read < nnz) parse_fail(line_no, "file ended after " + std::to_string(read) + " of " + std::to_string(nnz) + " entries");
    try {
        return SparseMatrix::from_entries(rows, triplets);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonFiniteValue) throw Error(ErrorCode::ParseError, e.what());
        throw;
    }
}

SparseMatrix read_matrix_market(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_matrix_market(in);
}

SparseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& m, const std::vector<std::string>& comments) {
    out << "%%MatrixMarket matrix coordinate complex general\n";
    for (const auto& c : comments) out << "% " << c << '\n';
    out << m.order() << ' ' << m.order() << ' ' << m.nnz() << '\n';
    char buf[64];
    auto put = [&](double v) {
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, res.ptr - buf);
    };
    for (const auto& t : m.entries()) {
        out << t.row + 1 << ' ' << t.col + 1 << ' ';
        put(t.value.real());
        out << ' ';
        put(t.value.imag());
        out << '\n';
    }
}

std::string write_matrix_market(const SparseMatrix& m, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_matrix_market(out, m, comments);
    return out.str();
}

}  // namespace zonedet

#include "matorder/io.hpp"

#include <fstream>
#include <sstream>

namespace matorder {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) { out.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

[[noreturn]] void bad_format(const std::string& what) {
    throw std::invalid_argument("matrix format error: " + what);
}

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!tokenize(line).empty()) return line;
    }
    bad_format("unexpected end of input");
}

long long to_positive_int(const std::string& s) {
    if (s.empty()) bad_format("expected a positive integer, got '" + s + "'");
    long long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') bad_format("expected a positive integer, got '" + s + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) bad_format("dimension out of range");
    }
    if (v == 0) bad_format("dimensions must be positive");
    return v;
}

template <Field F>
Mat<F> read_entries(std::istream& in, F field, int rows, int cols) {
    Mat<F> m(field, rows, cols);
    for (int i = 0; i < rows; ++i) {
        auto toks = tokenize(next_content_line(in));
        if (static_cast<int>(toks.size()) != cols)
            bad_format("row " + std::to_string(i + 1) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(cols));
        for (int j = 0; j < cols; ++j) m(i, j) = field.parse(toks[static_cast<std::size_t>(j)]);
    }
    return m;
}

} // namespace

std::string field_label(const AnyMat& m) {
    return std::visit([](const auto& x) { return x.field().name(); }, m);
}

std::string write_matrix(const AnyMat& m) {
    return std::visit(
        [](const auto& x) {
            std::ostringstream os;
            os << x.rows() << " " << x.cols() << " " << x.field().name() << "\n";
            for (int i = 0; i < x.rows(); ++i) {
                for (int j = 0; j < x.cols(); ++j) os << (j ? " " : "") << x.field().str(x(i, j));
                os << "\n";
            }
            return os.str();
        },
        m);
}

AnyMat read_matrix(std::istream& in, double complex_tol) {
    auto header = tokenize(next_content_line(in));
    if (header.size() < 3) bad_format("header must be `rows cols field`");
    const int rows = static_cast<int>(to_positive_int(header[0]));
    const int cols = static_cast<int>(to_positive_int(header[1]));
    const std::string& field = header[2];
    if (field == "Q") {
        if (header.size() != 3) bad_format("unexpected tokens after field tag");
        return read_entries(in, RationalField{}, rows, cols);
    }
    if (field == "GF") {
        if (header.size() != 4) bad_format("GF field tag needs a modulus: `GF <p>`");
        return read_entries(in, PrimeField(static_cast<std::uint64_t>(to_positive_int(header[3]))), rows, cols);
    }
    if (field == "C") {
        if (header.size() != 3) bad_format("unexpected tokens after field tag");
        return read_entries(in, ComplexField(complex_tol), rows, cols);
    }
    bad_format("unknown field tag '" + field + "' (expected Q, GF <p>, or C)");
}

AnyMat read_matrix_string(const std::string& text, double complex_tol) {
    std::istringstream in(text);
    return read_matrix(in, complex_tol);
}

AnyMat read_matrix_file(const std::string& path, double complex_tol) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix(in, complex_tol);
}

void write_matrix_file(const std::string& path, const AnyMat& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
    out << write_matrix(m);
}

std::string write_map(const AnyMat& coeffs, int n) {
    if (any_rows(coeffs) != n * n || any_cols(coeffs) != n * n)
        throw std::invalid_argument("map coefficients must be n^2 x n^2");
    return "vec column-major n=" + std::to_string(n) + "\n" + write_matrix(coeffs);
}

std::pair<AnyMat, int> read_map_string(const std::string& text, double complex_tol) {
    std::istringstream in(text);
    auto header = tokenize(next_content_line(in));
    if (header.size() != 3 || header[0] != "vec" || header[1] != "column-major" ||
        header[2].rfind("n=", 0) != 0)
        bad_format("map header must be `vec column-major n=<n>`");
    const int n = static_cast<int>(to_positive_int(header[2].substr(2)));
    AnyMat coeffs = read_matrix(in, complex_tol);
    if (any_rows(coeffs) != n * n || any_cols(coeffs) != n * n)
        bad_format("map coefficients must be " + std::to_string(n * n) + "x" + std::to_string(n * n));
    return {std::move(coeffs), n};
}

std::pair<AnyMat, int> read_map_file(const std::string& path, double complex_tol) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open map file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_map_string(buf.str(), complex_tol);
}

} // namespace matorder

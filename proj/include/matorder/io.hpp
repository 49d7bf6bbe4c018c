#pragma once

#include "matorder/matrix.hpp"

#include <iosfwd>
#include <variant>

namespace matorder {

/// Runtime-tagged matrix over one of the three supported scalar fields.
using AnyMat = std::variant<MatQ, MatGF, MatC>;

inline int any_rows(const AnyMat& m) { return std::visit([](const auto& x) { return x.rows(); }, m); }
inline int any_cols(const AnyMat& m) { return std::visit([](const auto& x) { return x.cols(); }, m); }

std::string field_label(const AnyMat& m);

/// Matrix text format:
///   line 1: `rows cols field` with field one of `Q`, `GF <p>`, `C`
///   then `rows` lines of `cols` whitespace-separated entries
///   (rationals as num/den or num, GF(p) entries as integers, complex as re,im)
/// Parsing is locale-independent; serialization round-trips exactly on exact
/// fields.
std::string write_matrix(const AnyMat& m);
AnyMat read_matrix(std::istream& in, double complex_tol = 1e-10);
AnyMat read_matrix_string(const std::string& text, double complex_tol = 1e-10);
AnyMat read_matrix_file(const std::string& path, double complex_tol = 1e-10);
void write_matrix_file(const std::string& path, const AnyMat& m);

/// Linear map file format: one header line `vec column-major n=<n>` followed
/// by the n^2 x n^2 coefficient matrix in the matrix text format.
std::string write_map(const AnyMat& coeffs, int n);
std::pair<AnyMat, int> read_map_string(const std::string& text, double complex_tol = 1e-10);
std::pair<AnyMat, int> read_map_file(const std::string& path, double complex_tol = 1e-10);

/// Apply a two-argument visitor to matrices that must share one field kind;
/// mixed kinds raise std::invalid_argument.
template <class Fn>
auto visit_same(Fn&& fn, const AnyMat& a, const AnyMat& b) {
    if (a.index() != b.index())
        throw std::invalid_argument("mixed-field matrix operation (" + field_label(a) + " vs " + field_label(b) + ")");
    if (std::holds_alternative<MatQ>(a)) return fn(std::get<MatQ>(a), std::get<MatQ>(b));
    if (std::holds_alternative<MatGF>(a)) return fn(std::get<MatGF>(a), std::get<MatGF>(b));
    return fn(std::get<MatC>(a), std::get<MatC>(b));
}

} // namespace matorder

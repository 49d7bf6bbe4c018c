#pragma once

#include "matorder/fields.hpp"

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

namespace matorder {

/// Dense matrix over a scalar field. Entries are stored row-major; the field
/// object travels with the matrix (it carries p for GF(p) and the comparison
/// tolerance for complex floats). All binary operations require compatible
/// fields and throw std::invalid_argument otherwise.
template <Field F>
class Mat {
public:
    using Fld = F;
    using Elem = typename F::Elem;

    Mat(F field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(check_dims(rows, cols)), field_.zero()) {}

    static Mat zero(F field, int rows, int cols) { return Mat(std::move(field), rows, cols); }

    static Mat identity(F field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Matrix unit E_ij (n x n).
    static Mat unit(F field, int n, int i, int j) {
        Mat m(field, n, n);
        m(i, j) = field.one();
        return m;
    }

    static Mat from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("matrix literal must be non-empty");
        Mat m(field, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    static Mat diagonal(F field, const std::vector<Elem>& d) {
        Mat m(field, static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const F& field() const { return field_; }

    Elem& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
    }
    const Elem& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r(merged_field(o), rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.add(e_[k], o.e_[k]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r(merged_field(o), rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.sub(e_[k], o.e_[k]);
        return r;
    }

    Mat operator-() const {
        Mat r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.neg(e_[k]);
        return r;
    }

    Mat operator*(const Mat& o) const {
        require_compatible(o);
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch: " + shape_str() + " * " + o.shape_str());
        Mat r(merged_field(o), rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = (*this)(i, k);
                if (field_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(aik, o(k, j)));
            }
        return r;
    }

    Mat scaled(const Elem& s) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.mul(s, e_[k]);
        return r;
    }

    Mat transpose() const {
        Mat r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Conjugate transpose; coincides with transpose on Q and GF(p), whose
    /// involution is trivial.
    Mat adjoint() const {
        Mat r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = field_.conj((*this)(i, j));
        return r;
    }

    Elem trace() const {
        if (!is_square()) throw std::invalid_argument("trace requires a square matrix");
        Elem t = field_.zero();
        for (int i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
        return t;
    }

    /// Exact entrywise equality (use matrices_equal() for tolerance-aware
    /// comparison on the complex field).
    bool operator==(const Mat& o) const {
        require_compatible(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (!field_.eq(e_[k], o.e_[k])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat row(int i) const {
        Mat r(field_, 1, cols_);
        for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

    Mat col(int j) const {
        Mat r(field_, rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    void require_compatible(const Mat& o) const {
        if (!field_.compatible(o.field_))
            throw std::invalid_argument("mixed-field matrix operation (" + field_.name() + " vs " + o.field_.name() + ")");
    }

private:
    static int check_dims(int rows, int cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
        return rows * cols;
    }

    void require_same_shape(const Mat& o) const {
        require_compatible(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch: " + shape_str() + " vs " + o.shape_str());
    }

    F merged_field(const Mat& o) const {
        if constexpr (std::is_same_v<F, ComplexField>) return field_.merge(o.field_);
        else return field_;
    }

    F field_;
    int rows_, cols_;
    std::vector<Elem> e_;
};

template <Field F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
    a.require_compatible(b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Mat<F> r(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <Field F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
    a.require_compatible(b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Mat<F> r(a.field(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

template <Field F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
    a.require_compatible(b);
    Mat<F> r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.field().is_zero(a(i, j))) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a.field().mul(a(i, j), b(k, l));
        }
    return r;
}

/// Column-major vectorization: columns stacked into a (rows*cols) x 1 matrix.
/// Fixed project-wide; the Kronecker identity vec(A X B) = (B^T (x) A) vec(X)
/// assumes it.
template <Field F>
Mat<F> vec_cm(const Mat<F>& m) {
    Mat<F> v(m.field(), m.rows() * m.cols(), 1);
    int k = 0;
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) v(k++, 0) = m(i, j);
    return v;
}

template <Field F>
Mat<F> unvec_cm(const Mat<F>& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw std::invalid_argument("unvec shape mismatch");
    Mat<F> m(v.field(), rows, cols);
    int k = 0;
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = v(k++, 0);
    return m;
}

/// Commutation matrix K with K vec(X) = vec(X^T) for X n x n.
template <Field F>
Mat<F> commutation_matrix(F field, int n) {
    Mat<F> k(field, n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            k(i * n + j, j * n + i) = field.one(); // vec index of (i,j) entry is j*n+i
    return k;
}

inline double frobenius_norm(const Mat<ComplexField>& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

inline double max_abs_entry(const Mat<ComplexField>& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
    return s;
}

/// Field-aware equality: exact on Q and GF(p); on complex floats, true when
/// ||a-b||_F <= tol * (1 + max(||a||_F, ||b||_F)).
template <Field F>
bool matrices_equal(const Mat<F>& a, const Mat<F>& b) {
    if constexpr (F::is_exact) {
        return a == b;
    } else {
        a.require_compatible(b);
        if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
        double tol = std::max(a.field().tol, b.field().tol);
        double scale = 1.0 + std::max(frobenius_norm(a), frobenius_norm(b));
        return frobenius_norm(a - b) <= tol * scale;
    }
}

template <Field F>
std::string to_debug_string(const Mat<F>& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.field().str(m(i, j));
        os << "\n";
    }
    return os.str();
}

using MatQ = Mat<RationalField>;
using MatGF = Mat<PrimeField>;
using MatC = Mat<ComplexField>;

} // namespace matorder

#include "rowcol/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rowcol {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = std::conj(data_[k]);
    return r;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const cx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

cx ComplexMatrix::trace() const {
    cx s = 0.0;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) s += (*this)(i, i);
    return s;
}

double ComplexMatrix::hermitian_defect() const {
    if (!square()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const cx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx s) {
    for (cx& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { a += b; return a; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { a -= b; return a; }
ComplexMatrix operator*(cx s, ComplexMatrix a) { a *= s; return a; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in matmul");
    ComplexMatrix r(a.rows(), b.cols());
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cx ail = a(i, l);
            if (ail == cx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += ail * b(l, j);
        }
    }
    return r;
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        s += std::real(std::conj(a.data()[k]) * b.data()[k]);
    return s;
}

bool MatrixSeq::same_shape() const {
    for (const auto& m : items)
        if (m.rows() != rows() || m.cols() != cols()) return false;
    return true;
}

double MatrixSeq::frobenius() const {
    double s = 0.0;
    for (const auto& m : items) {
        const double f = m.frobenius();
        s += f * f;
    }
    return std::sqrt(s);
}

MatrixSeq seq_add(const MatrixSeq& a, const MatrixSeq& b) {
    MatrixSeq r = a;
    for (std::size_t k = 0; k < r.items.size(); ++k) r.items[k] += b.items[k];
    return r;
}

MatrixSeq seq_sub(const MatrixSeq& a, const MatrixSeq& b) {
    MatrixSeq r = a;
    for (std::size_t k = 0; k < r.items.size(); ++k) r.items[k] -= b.items[k];
    return r;
}

MatrixSeq seq_scale(cx s, const MatrixSeq& a) {
    MatrixSeq r = a;
    for (auto& m : r.items) m *= s;
    return r;
}

MatrixSeq seq_zero_like(const MatrixSeq& a) {
    MatrixSeq r;
    r.items.assign(a.items.size(), ComplexMatrix(a.rows(), a.cols()));
    return r;
}

double seq_hs_inner(const MatrixSeq& a, const MatrixSeq& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.items.size(); ++k) s += hs_inner(a.items[k], b.items[k]);
    return s;
}

} // namespace rowcol

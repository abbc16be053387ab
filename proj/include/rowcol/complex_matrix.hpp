#ifndef ROWCOL_COMPLEX_MATRIX_HPP
#define ROWCOL_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace rowcol {

using cx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool square() const { return rows_ == cols_; }

    cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<cx>& data() { return data_; }
    const std::vector<cx>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    double frobenius() const;
    cx trace() const;
    /// ||A - A*||_F, 0 for non-square.
    double hermitian_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cx s);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cx s, ComplexMatrix a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re sum_ij conj(a_ij) b_ij, the real Hilbert-Schmidt inner product.
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Finite sequence of same-shape matrices; the central object everywhere.
struct MatrixSeq {
    std::vector<ComplexMatrix> items;

    std::size_t size() const { return items.size(); }
    std::size_t rows() const { return items.empty() ? 0 : items.front().rows(); }
    std::size_t cols() const { return items.empty() ? 0 : items.front().cols(); }
    bool same_shape() const;
    double frobenius() const;
};

MatrixSeq seq_add(const MatrixSeq& a, const MatrixSeq& b);
MatrixSeq seq_sub(const MatrixSeq& a, const MatrixSeq& b);
MatrixSeq seq_scale(cx s, const MatrixSeq& a);
MatrixSeq seq_zero_like(const MatrixSeq& a);
double seq_hs_inner(const MatrixSeq& a, const MatrixSeq& b);

} // namespace rowcol

#endif

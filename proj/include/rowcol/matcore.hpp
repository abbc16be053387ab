#ifndef ROWCOL_MATCORE_HPP
#define ROWCOL_MATCORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rowcol/complex_matrix.hpp"

namespace rowcol {

struct HermitianEig {
    std::vector<double> eigenvalues; // sorted descending
    ComplexMatrix eigenvectors;      // unitary, columns match eigenvalues
};

struct Svd {
    std::vector<double> singulars; // nonnegative, descending, length min(m,n)
    ComplexMatrix left;            // m x m unitary
    ComplexMatrix right;           // n x n unitary
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian when ||A - A*||_F > tol * ||A||_F, NoConvergence
/// after 100 sweeps.
HermitianEig hermitian_eig(const ComplexMatrix& a, double tol = 1e-10);

/// SVD via the eigendecomposition of A*A with a deterministic phase fix-up.
Svd svd(const ComplexMatrix& a);

/// Square root of a Hermitian PSD matrix; eigenvalues in
/// [-1e-8*||A||, 0) are clamped to zero, below that throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

enum class MatrixFamily { ginibre, hermitian, diagonal, rank_one };

MatrixFamily family_from_string(const std::string& s);
std::string family_to_string(MatrixFamily f);

/// Reproducible instance generator: same (seed, n, N, family) gives a
/// bit-identical sequence. Item k draws from an independent stream (seed, k).
MatrixSeq random_instance(std::uint64_t seed, std::size_t n, std::size_t N, MatrixFamily family);

/// Haar-distributed unitary from QR of a Ginibre matrix.
ComplexMatrix haar_unitary(std::uint64_t seed, std::size_t n);

namespace detail {

/// Eigenvalues of a Hermitian matrix, descending, no vectors. Uses Jacobi for
/// small n and Householder tridiagonalization + implicit QL above that.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Singular values (descending) without the full SVD.
std::vector<double> singular_values(const ComplexMatrix& a);

} // namespace detail

/// File format: {"rows": n, "cols": m, "re": [...], "im": [...]} row-major;
/// sequences are JSON arrays of such objects.
std::string matrix_to_json(const ComplexMatrix& a);
std::string seq_to_json(const MatrixSeq& x);
ComplexMatrix matrix_from_json(const std::string& text);
MatrixSeq seq_from_json(const std::string& text);
MatrixSeq seq_from_json_file(const std::string& path);
void seq_to_json_file(const MatrixSeq& x, const std::string& path);

} // namespace rowcol

#endif

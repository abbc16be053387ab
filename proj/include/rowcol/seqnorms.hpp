#ifndef ROWCOL_SEQNORMS_HPP
#define ROWCOL_SEQNORMS_HPP

#include <cstdint>

#include "rowcol/complex_matrix.hpp"
#include "rowcol/lorentz.hpp"

namespace rowcol {

/// sum_n x_n x_n*
ComplexMatrix gram_row(const MatrixSeq& x);
/// sum_n x_n* x_n
ComplexMatrix gram_col(const MatrixSeq& x);

/// || (sum x x*)^{1/2} ||_{S_{p,q}}; (inf,inf) is the row operator norm,
/// (1,1) the row trace norm.
double row_norm(const MatrixSeq& x, Exponents e);
double col_norm(const MatrixSeq& x, Exponents e);
/// max(row, col)
double intersect_norm(const MatrixSeq& x, Exponents e);

/// s-numbers of the row Gram square root (unit trace weight per value).
StepFunction row_s_numbers(const MatrixSeq& x);
StepFunction col_s_numbers(const MatrixSeq& x);

/// Decomposition x = y + z with cost = row_norm(y) + col_norm(z) and a
/// certified optimality gap from a dual pairing certificate.
struct SumSplit {
    MatrixSeq y;
    MatrixSeq z;
    double cost = 0.0;
    double gap = 0.0;
    int iterations = 0;
    bool budget_exhausted = false;
};

/// Subgradient minimization of row_norm(y, e) + col_norm(x - y, e).
/// The returned cost is always a true upper bound on the infimum; gap is
/// cost minus the best dual lower bound, reported, never hidden.
SumSplit sum_norm(const MatrixSeq& x, Exponents e, int budget = 2000, std::uint64_t seed = 0);

/// Bilinear pairing sum_n tr(x_n y_n^T).
double bilinear_pairing(const MatrixSeq& x, const MatrixSeq& y);

} // namespace rowcol

#endif

#ifndef ROWCOL_SPLIT_OPT_HPP
#define ROWCOL_SPLIT_OPT_HPP

// Internal subgradient machinery shared by the sum norm, the K-functional
// upper bounds and the decomposition certificates. Costs returned are always
// feasible values; lower bounds always come from explicitly normalized dual
// certificates, so reported gaps are rigorous.

#include <cstdint>
#include <vector>

#include "rowcol/complex_matrix.hpp"
#include "rowcol/lorentz.hpp"

namespace rowcol::detail {

enum class NormKind { Row, Col, Intersect };

struct NormValueGrad {
    double value = 0.0;
    MatrixSeq grad; // one subgradient (empty when the norm vanishes)
};

double seq_norm_eval(const MatrixSeq& v, NormKind kind, Exponents e);
NormValueGrad seq_norm_with_grad(const MatrixSeq& v, NormKind kind, Exponents e);

/// Gradient of the Lorentz norm on a descending vector of singular values
/// with unit weights.
std::vector<double> lorentz_grad(const std::vector<double>& sigma, Exponents e);

/// Upper bound on the dual norm of w (exact for Row/Col; for Intersect the
/// dual is a sum norm, bounded by min(row, col) and optionally refined by a
/// short inner minimization).
double dual_norm_upper(const MatrixSeq& w, NormKind kind, Exponents e, int refine_budget,
                       std::uint64_t seed);

struct TermSpec {
    NormKind kind;
    Exponents e;
    double weight = 1.0;
};

struct SplitResult {
    MatrixSeq y; // term0 argument; term1 sees x - y
    double cost = 0.0;
    double lower = 0.0;
    double gap = 0.0;
    int iterations = 0;
    bool budget_exhausted = false;
};

/// Minimize t0.weight * N0(y) + t1.weight * N1(x - y) over y.
SplitResult minimize_split(const MatrixSeq& x, TermSpec t0, TermSpec t1, int budget,
                           std::uint64_t seed,
                           const std::vector<MatrixSeq>& warm_starts = {});

struct TripleResult {
    MatrixSeq a0, y, z; // x = a0 + y + z
    double cost = 0.0;
    double lower = 0.0;
    double gap = 0.0;
    int iterations = 0;
    bool budget_exhausted = false;
};

/// Minimize w0 * max(row_e0, col_e0)(x - y - z) + w1 * (row_e1(y) + col_e1(z)).
TripleResult minimize_intersect_plus_sum(const MatrixSeq& x, Exponents e0, double w0,
                                         Exponents e1, double w1, int budget,
                                         std::uint64_t seed,
                                         const TripleResult* warm = nullptr);

} // namespace rowcol::detail

#endif

#include "rowcol/seqnorms.hpp"

#include <cmath>

#include "rowcol/errors.hpp"
#include "rowcol/matcore.hpp"
#include "split_opt.hpp"

namespace rowcol {

ComplexMatrix gram_row(const MatrixSeq& x) {
    const std::size_t n = x.rows();
    ComplexMatrix g(n, n);
    for (const auto& m : x.items) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                cx acc = 0.0;
                for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * std::conj(m(j, k));
                g(i, j) += acc;
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g(i, j) = std::conj(g(j, i));
    return g;
}

ComplexMatrix gram_col(const MatrixSeq& x) {
    const std::size_t m = x.cols();
    ComplexMatrix g(m, m);
    for (const auto& a : x.items) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                cx acc = 0.0;
                for (std::size_t k = 0; k < a.rows(); ++k) acc += std::conj(a(k, i)) * a(k, j);
                g(i, j) += acc;
            }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) g(i, j) = std::conj(g(j, i));
    return g;
}

namespace {

StepFunction gram_s_numbers(const ComplexMatrix& gram) {
    std::vector<double> lam = detail::hermitian_eigenvalues(gram);
    for (double& v : lam) v = std::sqrt(std::max(v, 0.0));
    return StepFunction::from_levels(std::move(lam), 1.0);
}

} // namespace

StepFunction row_s_numbers(const MatrixSeq& x) { return gram_s_numbers(gram_row(x)); }
StepFunction col_s_numbers(const MatrixSeq& x) { return gram_s_numbers(gram_col(x)); }

double row_norm(const MatrixSeq& x, Exponents e) { return lorentz_norm(row_s_numbers(x), e); }
double col_norm(const MatrixSeq& x, Exponents e) { return lorentz_norm(col_s_numbers(x), e); }

double intersect_norm(const MatrixSeq& x, Exponents e) {
    return std::max(row_norm(x, e), col_norm(x, e));
}

SumSplit sum_norm(const MatrixSeq& x, Exponents e, int budget, std::uint64_t seed) {
    detail::SplitResult r = detail::minimize_split(
        x, {detail::NormKind::Row, e, 1.0}, {detail::NormKind::Col, e, 1.0}, budget, seed);
    SumSplit out;
    out.z = seq_sub(x, r.y);
    out.y = std::move(r.y);
    out.cost = r.cost;
    out.gap = r.gap;
    out.iterations = r.iterations;
    out.budget_exhausted = r.budget_exhausted;
    return out;
}

double bilinear_pairing(const MatrixSeq& x, const MatrixSeq& y) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.items.size(); ++k) {
        const auto& a = x.items[k];
        const auto& b = y.items[k];
        for (std::size_t i = 0; i < a.data().size(); ++i)
            s += std::real(a.data()[i] * b.data()[i]);
    }
    return s;
}

} // namespace rowcol

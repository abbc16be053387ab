#ifndef ROWCOL_LORENTZ_HPP
#define ROWCOL_LORENTZ_HPP

#include <limits>
#include <string>
#include <vector>

#include "rowcol/complex_matrix.hpp"

namespace rowcol {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Lorentz exponents (p, q); infinity is stored as IEEE inf.
struct Exponents {
    double p = 2.0;
    double q = 2.0;

    bool p_inf() const { return p == kInf; }
    bool q_inf() const { return q == kInf; }
    /// conjugate exponent p' with 1/p + 1/p' = 1 (p >= 1)
    static double conjugate(double p);
    Exponents dual() const { return {conjugate(p), conjugate(q)}; }
};

/// Decreasing rearrangement as (value, measure-weight) steps; values strictly
/// decreasing, weights positive. Hosts generalized s-numbers and every
/// Lorentz-norm evaluation.
struct StepFunction {
    struct Step {
        double value;
        double weight;
    };
    std::vector<Step> steps;

    /// sorts descending and merges values equal within 1e-12 relative
    static StepFunction from_levels(std::vector<double> values, double weight_each);
    static StepFunction from_pairs(std::vector<Step> raw);

    double total_measure() const;
    /// f*(0), the essential sup
    double top() const { return steps.empty() ? 0.0 : steps.front().value; }
    /// value at measure coordinate s (right-continuous step evaluation)
    double value_at(double s) const;
};

/// Singular values of A as a step function, each carrying `trace_weight`
/// of measure. Equal values are merged.
StepFunction s_numbers(const ComplexMatrix& a, double trace_weight = 1.0);

/// Decreasing rearrangement of a disjoint union; total measure is preserved.
StepFunction merge(const std::vector<StepFunction>& parts);

/// ( int_0^inf (s^{1/p} f*(s))^q ds/s )^{1/q}, evaluated in closed form over
/// the steps; q = inf gives sup_s s^{1/p} f*(s). Throws DivergentNorm for
/// p = inf with q < inf on a nonzero function.
double lorentz_norm(const StepFunction& f, Exponents e);

/// sup_{u>0} u^{-1/p'} int_0^u f*(s) ds, the bracket norm equivalent to the
/// weak-L_p quasi-norm for p > 1. Exact over steps (boundaries and interior
/// critical points both checked).
double weak_bracket_norm(const StepFunction& f, double p);

} // namespace rowcol

#endif

#include "rowcol/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "rowcol/errors.hpp"
#include "rowcol/matcore.hpp"

namespace rowcol {

double Exponents::conjugate(double p) {
    if (p == kInf) return 1.0;
    if (p == 1.0) return kInf;
    return p / (p - 1.0);
}

namespace {

constexpr double kMergeTol = 1e-12;

bool mergeable(double a, double b) {
    return std::abs(a - b) <= kMergeTol * std::max(std::abs(a), std::abs(b));
}

} // namespace

StepFunction StepFunction::from_levels(std::vector<double> values, double weight_each) {
    std::vector<Step> raw;
    raw.reserve(values.size());
    for (double v : values) raw.push_back({v, weight_each});
    return from_pairs(std::move(raw));
}

StepFunction StepFunction::from_pairs(std::vector<Step> raw) {
    std::stable_sort(raw.begin(), raw.end(), [](const Step& a, const Step& b) { return a.value > b.value; });
    StepFunction f;
    for (const Step& s : raw) {
        if (s.weight <= 0.0 || s.value <= 0.0) continue;
        if (!f.steps.empty() && mergeable(f.steps.back().value, s.value))
            f.steps.back().weight += s.weight;
        else
            f.steps.push_back(s);
    }
    return f;
}

double StepFunction::total_measure() const {
    double m = 0.0;
    for (const Step& s : steps) m += s.weight;
    return m;
}

double StepFunction::value_at(double s) const {
    double acc = 0.0;
    for (const Step& st : steps) {
        acc += st.weight;
        if (s < acc) return st.value;
    }
    return 0.0;
}

StepFunction s_numbers(const ComplexMatrix& a, double trace_weight) {
    if (trace_weight <= 0.0) throw PreconditionViolated("s_numbers: trace_weight must be positive");
    return StepFunction::from_levels(detail::singular_values(a), trace_weight);
}

StepFunction merge(const std::vector<StepFunction>& parts) {
    std::vector<StepFunction::Step> raw;
    for (const auto& f : parts) raw.insert(raw.end(), f.steps.begin(), f.steps.end());
    return StepFunction::from_pairs(std::move(raw));
}

double lorentz_norm(const StepFunction& f, Exponents e) {
    if (e.q < 1.0) throw PreconditionViolated("lorentz_norm: q must be >= 1");
    if (e.p <= 0.0) throw PreconditionViolated("lorentz_norm: p must be positive");
    if (f.steps.empty() || f.top() == 0.0) return 0.0;
    if (e.p_inf()) {
        if (!e.q_inf()) throw DivergentNorm("L_{inf,q} with q < inf diverges");
        return f.top();
    }
    if (e.q_inf()) {
        double best = 0.0;
        double s = 0.0;
        for (const auto& st : f.steps) {
            s += st.weight;
            best = std::max(best, st.value * std::pow(s, 1.0 / e.p));
        }
        return best;
    }
    const double alpha = e.q / e.p;
    double acc = 0.0;
    double s_prev = 0.0, pow_prev = 0.0;
    for (const auto& st : f.steps) {
        const double s_next = s_prev + st.weight;
        const double pow_next = std::pow(s_next, alpha);
        if (st.value > 0.0) acc += std::pow(st.value, e.q) * (pow_next - pow_prev) / alpha;
        s_prev = s_next;
        pow_prev = pow_next;
    }
    return std::pow(acc, 1.0 / e.q);
}

double weak_bracket_norm(const StepFunction& f, double p) {
    if (p <= 1.0) throw PreconditionViolated("weak_bracket_norm: p must be > 1");
    if (f.steps.empty() || f.top() == 0.0) return 0.0;
    const double beta = 1.0 - 1.0 / p; // 1/p'
    double best = 0.0;
    double s_prev = 0.0;
    double integral_prev = 0.0;
    for (const auto& st : f.steps) {
        const double s_next = s_prev + st.weight;
        const double integral_next = integral_prev + st.value * st.weight;
        // g(u) = (A + v u) u^{-beta} on [s_prev, s_next], A = F(s_prev) - v s_prev
        const double a = integral_prev - st.value * s_prev;
        if (st.value > 0.0 && a > 0.0) {
            const double u_star = a * beta / (st.value * (1.0 - beta));
            if (u_star > s_prev && u_star < s_next)
                best = std::max(best, (a + st.value * u_star) * std::pow(u_star, -beta));
        }
        if (s_next > 0.0) best = std::max(best, integral_next * std::pow(s_next, -beta));
        s_prev = s_next;
        integral_prev = integral_next;
    }
    return best;
}

} // namespace rowcol

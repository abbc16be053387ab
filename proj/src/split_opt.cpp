#include "split_opt.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rowcol/errors.hpp"
#include "rowcol/matcore.hpp"
#include "rowcol/rng.hpp"
#include "rowcol/seqnorms.hpp"

namespace rowcol::detail {

namespace {

struct GramEig {
    std::vector<double> sigma; // sqrt of clamped eigenvalues, descending
    ComplexMatrix vectors;
};

GramEig gram_eig(const MatrixSeq& v, NormKind kind) {
    const ComplexMatrix g = kind == NormKind::Row ? gram_row(v) : gram_col(v);
    HermitianEig eig = hermitian_eig(g, 1e-6);
    GramEig out;
    out.sigma.resize(eig.eigenvalues.size());
    for (std::size_t i = 0; i < out.sigma.size(); ++i)
        out.sigma[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    out.vectors = std::move(eig.eigenvectors);
    return out;
}

double seq_frobenius(const MatrixSeq& v) { return v.frobenius(); }

MatrixSeq random_like(const MatrixSeq& x, double fro, std::uint64_t seed, std::uint64_t tag) {
    Rng rng = Rng::stream(seed, tag);
    MatrixSeq r = seq_zero_like(x);
    for (auto& m : r.items)
        for (auto& c : m.data()) c = rng.cnormal();
    const double rf = r.frobenius();
    if (rf > 0.0) r = seq_scale(cx(fro / rf, 0.0), r);
    return r;
}

bool all_diagonal(const MatrixSeq& x) {
    if (x.rows() != x.cols()) return false;
    const double tol = 1e-14 * (1.0 + x.frobenius());
    for (const auto& m : x.items)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (i != j && std::abs(m(i, j)) > tol) return false;
    return true;
}

} // namespace

std::vector<double> lorentz_grad(const std::vector<double>& sigma, Exponents e) {
    const std::size_t k = sigma.size();
    std::vector<double> phi(k, 0.0);
    if (k == 0 || sigma.front() <= 0.0) return phi;
    if (e.p_inf()) {
        phi[0] = 1.0;
        return phi;
    }
    if (e.q_inf()) {
        std::size_t best = 0;
        double bv = -1.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double v = sigma[i] * std::pow(double(i + 1), 1.0 / e.p);
            if (v > bv) {
                bv = v;
                best = i;
            }
        }
        phi[best] = std::pow(double(best + 1), 1.0 / e.p);
        return phi;
    }
    const double alpha = e.q / e.p;
    double total = 0.0;
    std::vector<double> c(k);
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = (std::pow(double(i + 1), alpha) - std::pow(double(i), alpha)) / alpha;
        if (sigma[i] > 0.0) total += std::pow(sigma[i], e.q) * c[i];
    }
    const double val = std::pow(total, 1.0 / e.q);
    if (val <= 0.0) return phi;
    for (std::size_t i = 0; i < k; ++i) {
        if (sigma[i] > 0.0)
            phi[i] = std::pow(val, 1.0 - e.q) * std::pow(sigma[i], e.q - 1.0) * c[i];
        else if (e.q == 1.0)
            phi[i] = c[i];
    }
    return phi;
}

double seq_norm_eval(const MatrixSeq& v, NormKind kind, Exponents e) {
    if (kind == NormKind::Intersect)
        return std::max(seq_norm_eval(v, NormKind::Row, e), seq_norm_eval(v, NormKind::Col, e));
    const GramEig ge = gram_eig(v, kind);
    return lorentz_norm(StepFunction::from_levels(ge.sigma, 1.0), e);
}

NormValueGrad seq_norm_with_grad(const MatrixSeq& v, NormKind kind, Exponents e) {
    if (kind == NormKind::Intersect) {
        NormValueGrad r = seq_norm_with_grad(v, NormKind::Row, e);
        NormValueGrad c = seq_norm_with_grad(v, NormKind::Col, e);
        return r.value >= c.value ? std::move(r) : std::move(c);
    }
    const GramEig ge = gram_eig(v, kind);
    NormValueGrad out;
    out.value = lorentz_norm(StepFunction::from_levels(ge.sigma, 1.0), e);
    if (out.value <= 0.0) return out;
    const std::vector<double> phi = lorentz_grad(ge.sigma, e);
    const std::size_t d = ge.sigma.size();
    const double delta = 1e-14 * ge.sigma.front();
    ComplexMatrix mult(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (ge.sigma[i] <= delta || phi[i] == 0.0) continue;
        const double w = phi[i] / ge.sigma[i];
        for (std::size_t r = 0; r < d; ++r) {
            const cx vr = w * ge.vectors(r, i);
            for (std::size_t cidx = 0; cidx < d; ++cidx)
                mult(r, cidx) += vr * std::conj(ge.vectors(cidx, i));
        }
    }
    out.grad.items.reserve(v.items.size());
    for (const auto& m : v.items)
        out.grad.items.push_back(kind == NormKind::Row ? matmul(mult, m) : matmul(m, mult));
    return out;
}

double dual_norm_upper(const MatrixSeq& w, NormKind kind, Exponents e, int refine_budget,
                       std::uint64_t seed) {
    if (e.p < 1.0 || e.q < 1.0) return -1.0; // no usable duality for quasi-norms
    const Exponents d = e.dual();
    switch (kind) {
        case NormKind::Row: return seq_norm_eval(w, NormKind::Row, d);
        case NormKind::Col: return seq_norm_eval(w, NormKind::Col, d);
        case NormKind::Intersect: {
            double coarse = std::min(seq_norm_eval(w, NormKind::Row, d),
                                     seq_norm_eval(w, NormKind::Col, d));
            if (refine_budget > 0) {
                SplitResult s = minimize_split(w, {NormKind::Row, d, 1.0},
                                               {NormKind::Col, d, 1.0}, refine_budget, seed);
                coarse = std::min(coarse, s.cost);
            }
            return coarse;
        }
    }
    return -1.0;
}

namespace {

double certificate_lower(const MatrixSeq& x, const MatrixSeq& w, const TermSpec& t0,
                         const TermSpec& t1, int refine_budget, std::uint64_t seed) {
    const double num = seq_hs_inner(x, w);
    if (!(num > 0.0)) return 0.0;
    const double d0 = dual_norm_upper(w, t0.kind, t0.e, refine_budget, seed);
    const double d1 = dual_norm_upper(w, t1.kind, t1.e, refine_budget, seed + 1);
    if (d0 < 0.0 || d1 < 0.0) return 0.0;
    const double den = std::max(d0 / t0.weight, d1 / t1.weight);
    if (!(den > 0.0)) return 0.0;
    return num / den;
}

// level-c spectral shrink of the row (or column) Gram square root
std::vector<MatrixSeq> shrink_family(const MatrixSeq& x, NormKind side) {
    std::vector<MatrixSeq> out;
    const GramEig ge = gram_eig(x, side == NormKind::Row ? NormKind::Row : NormKind::Col);
    const std::size_t d = ge.sigma.size();
    std::vector<double> levels;
    for (double s : ge.sigma)
        if (s > 0.0 && (levels.empty() || s < levels.back() * (1.0 - 1e-12))) levels.push_back(s);
    if (levels.size() > 12) {
        std::vector<double> sub;
        for (std::size_t i = 0; i < 12; ++i) sub.push_back(levels[i * levels.size() / 12]);
        levels = std::move(sub);
    }
    for (double c : levels) {
        ComplexMatrix sc(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const double f = ge.sigma[i] > 0.0 ? std::min(ge.sigma[i], c) / ge.sigma[i] : 0.0;
            if (f == 0.0) continue;
            for (std::size_t r = 0; r < d; ++r) {
                const cx vr = f * ge.vectors(r, i);
                for (std::size_t cc = 0; cc < d; ++cc) sc(r, cc) += vr * std::conj(ge.vectors(cc, i));
            }
        }
        MatrixSeq y;
        y.items.reserve(x.items.size());
        for (const auto& m : x.items)
            y.items.push_back(side == NormKind::Row ? matmul(sc, m) : matmul(m, sc));
        out.push_back(std::move(y));
    }
    return out;
}

// exact per-coordinate clip for diagonal sequences
std::vector<MatrixSeq> diagonal_clip_family(const MatrixSeq& x) {
    std::vector<MatrixSeq> out;
    const std::size_t n = x.rows();
    std::vector<double> coord_norm(n, 0.0);
    for (const auto& m : x.items)
        for (std::size_t i = 0; i < n; ++i) coord_norm[i] += std::norm(m(i, i));
    for (double& v : coord_norm) v = std::sqrt(v);
    std::vector<double> levels = coord_norm;
    levels.push_back(0.0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (double c : levels) {
        MatrixSeq y = seq_zero_like(x);
        for (std::size_t k = 0; k < x.items.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) {
                const double f = coord_norm[i] > 0.0 ? std::min(1.0, c / coord_norm[i]) : 0.0;
                y.items[k](i, i) = f * x.items[k](i, i);
            }
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace

SplitResult minimize_split(const MatrixSeq& x, TermSpec t0, TermSpec t1, int budget,
                           std::uint64_t seed, const std::vector<MatrixSeq>& warm_starts) {
    SplitResult res;
    const double xfro = x.frobenius();
    if (xfro == 0.0 || x.items.empty()) {
        res.y = seq_zero_like(x);
        return res;
    }

    auto objective = [&](const MatrixSeq& y) {
        return t0.weight * seq_norm_eval(y, t0.kind, t0.e) +
               t1.weight * seq_norm_eval(seq_sub(x, y), t1.kind, t1.e);
    };

    // candidate starting points
    std::vector<MatrixSeq> cands;
    cands.push_back(x);
    cands.push_back(seq_zero_like(x));
    cands.push_back(seq_scale(cx(0.5, 0.0), x));
    for (auto& y : shrink_family(x, NormKind::Row)) cands.push_back(std::move(y));
    for (auto& z : shrink_family(x, NormKind::Col)) cands.push_back(seq_sub(x, z));
    if (all_diagonal(x))
        for (auto& y : diagonal_clip_family(x)) cands.push_back(std::move(y));
    for (const auto& w : warm_starts) cands.push_back(w);

    MatrixSeq best_y;
    double best_cost = kInf;
    std::vector<std::pair<double, std::size_t>> ranked;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const double c = objective(cands[i]);
        ranked.emplace_back(c, i);
        if (c < best_cost) {
            best_cost = c;
            best_y = cands[i];
        }
    }
    std::stable_sort(ranked.begin(), ranked.end());

    double lower = 0.0;
    const bool dual_ok = t0.e.p >= 1.0 && t1.e.p >= 1.0;
    auto refresh_lower = [&](const MatrixSeq& y_at) {
        if (!dual_ok) return;
        const MatrixSeq z_at = seq_sub(x, y_at);
        NormValueGrad a = seq_norm_with_grad(y_at, t0.kind, t0.e);
        NormValueGrad b = seq_norm_with_grad(z_at, t1.kind, t1.e);
        std::vector<MatrixSeq> ws;
        if (!a.grad.items.empty()) ws.push_back(a.grad);
        if (!b.grad.items.empty()) ws.push_back(b.grad);
        if (ws.size() == 2) {
            MatrixSeq avg = seq_scale(cx(0.5, 0.0), seq_add(ws[0], ws[1]));
            ws.push_back(std::move(avg));
        }
        ws.push_back(x);
        for (const auto& w : ws)
            lower = std::max(lower, certificate_lower(x, w, t0, t1, 0, seed));
    };
    refresh_lower(best_y);

    const double tol_rel = 1e-4;
    auto done = [&]() { return best_cost - lower <= tol_rel * std::max(best_cost, 1e-300); };

    if (!done() && budget > 0) {
        std::vector<MatrixSeq> starts;
        starts.push_back(best_y);
        for (std::size_t r = 1; r < ranked.size() && starts.size() < 3; ++r)
            if (ranked[r].first < 4.0 * best_cost) starts.push_back(cands[ranked[r].second]);
        starts.push_back(seq_add(best_y, random_like(x, 0.15 * xfro, seed, 101)));
        starts.push_back(seq_add(best_y, random_like(x, 0.15 * xfro, seed, 202)));

        const int per_run = std::max(8, budget / static_cast<int>(starts.size()));
        for (const auto& start : starts) {
            MatrixSeq y = start;
            for (int it = 0; it < per_run && res.iterations < budget; ++it, ++res.iterations) {
                NormValueGrad a = seq_norm_with_grad(y, t0.kind, t0.e);
                NormValueGrad b = seq_norm_with_grad(seq_sub(x, y), t1.kind, t1.e);
                const double j = t0.weight * a.value + t1.weight * b.value;
                if (j < best_cost) {
                    best_cost = j;
                    best_y = y;
                }
                MatrixSeq g = seq_zero_like(x);
                if (!a.grad.items.empty()) g = seq_add(g, seq_scale(cx(t0.weight, 0.0), a.grad));
                if (!b.grad.items.empty()) g = seq_sub(g, seq_scale(cx(t1.weight, 0.0), b.grad));
                const double gn = g.frobenius();
                if (gn < 1e-30) break;
                const double target = lower > 0.0 ? lower * 0.999 : best_cost * 0.9;
                double step = (j - target) / (gn * gn);
                step = std::max(step, 1e-4 * xfro / gn);
                step = std::min(step, 2.0 * xfro / gn);
                y = seq_sub(y, seq_scale(cx(step, 0.0), g));
                if (res.iterations % 30 == 29) {
                    refresh_lower(best_y);
                    if (done()) break;
                }
            }
            if (done()) break;
        }
        res.budget_exhausted = res.iterations >= budget && !done();
    }
    refresh_lower(best_y);

    res.y = std::move(best_y);
    res.cost = best_cost;
    res.lower = std::min(lower, best_cost);
    res.gap = res.cost - res.lower;
    return res;
}

TripleResult minimize_intersect_plus_sum(const MatrixSeq& x, Exponents e0, double w0,
                                         Exponents e1, double w1, int budget,
                                         std::uint64_t seed, const TripleResult* warm) {
    TripleResult res;
    const double xfro = x.frobenius();
    if (xfro == 0.0 || x.items.empty()) {
        res.a0 = seq_zero_like(x);
        res.y = seq_zero_like(x);
        res.z = seq_zero_like(x);
        return res;
    }

    const TermSpec term_i{NormKind::Intersect, e0, w0};
    auto objective = [&](const MatrixSeq& y, const MatrixSeq& z) {
        const MatrixSeq a0 = seq_sub(seq_sub(x, y), z);
        return w0 * seq_norm_eval(a0, NormKind::Intersect, e0) +
               w1 * (seq_norm_eval(y, NormKind::Row, e1) + seq_norm_eval(z, NormKind::Col, e1));
    };

    // starting points: all-a0, sum-split of x, per-item soft thresholds
    std::vector<std::pair<MatrixSeq, MatrixSeq>> cands;
    cands.emplace_back(seq_zero_like(x), seq_zero_like(x));
    {
        SplitResult ss = minimize_split(x, {NormKind::Row, e1, 1.0}, {NormKind::Col, e1, 1.0},
                                        std::max(60, budget / 8), seed + 7);
        MatrixSeq zs = seq_sub(x, ss.y);
        cands.emplace_back(ss.y, std::move(zs));
    }
    {
        std::vector<double> levels;
        std::vector<Svd> svds;
        svds.reserve(x.items.size());
        for (const auto& m : x.items) {
            svds.push_back(svd(m));
            for (double s : svds.back().singulars)
                if (s > 0.0) levels.push_back(s);
        }
        std::sort(levels.begin(), levels.end(), std::greater<double>());
        if (levels.size() > 16) {
            std::vector<double> sub;
            for (std::size_t i = 0; i < 16; ++i) sub.push_back(levels[i * levels.size() / 16]);
            levels = std::move(sub);
        }
        levels.push_back(0.0);
        for (double c : levels) {
            MatrixSeq a1 = seq_zero_like(x);
            for (std::size_t k = 0; k < x.items.size(); ++k) {
                const Svd& s = svds[k];
                const std::size_t d = s.singulars.size();
                for (std::size_t i = 0; i < d; ++i) {
                    const double excess = std::max(s.singulars[i] - c, 0.0);
                    if (excess == 0.0) continue;
                    for (std::size_t r = 0; r < x.rows(); ++r) {
                        const cx ur = excess * s.left(r, i);
                        for (std::size_t cc = 0; cc < x.cols(); ++cc)
                            a1.items[k](r, cc) += ur * std::conj(s.right(cc, i));
                    }
                }
            }
            cands.emplace_back(a1, seq_zero_like(x));
            cands.emplace_back(seq_zero_like(x), std::move(a1));
        }
    }
    if (warm) cands.emplace_back(warm->y, warm->z);

    MatrixSeq best_y, best_z;
    double best_cost = kInf;
    for (auto& [cy, cz] : cands) {
        const double c = objective(cy, cz);
        if (c < best_cost) {
            best_cost = c;
            best_y = cy;
            best_z = cz;
        }
    }

    double lower = 0.0;
    auto refresh_lower = [&](bool refine) {
        const MatrixSeq a0 = seq_sub(seq_sub(x, best_y), best_z);
        std::vector<MatrixSeq> ws;
        NormValueGrad gi = seq_norm_with_grad(a0, NormKind::Intersect, e0);
        NormValueGrad gy = seq_norm_with_grad(best_y, NormKind::Row, e1);
        NormValueGrad gz = seq_norm_with_grad(best_z, NormKind::Col, e1);
        if (!gi.grad.items.empty()) ws.push_back(gi.grad);
        if (!gy.grad.items.empty()) ws.push_back(gy.grad);
        if (!gz.grad.items.empty()) ws.push_back(gz.grad);
        ws.push_back(x);
        if (x.items.size() == 1 && e0.p_inf() && e1.p == 1.0) {
            // single item: the tight dual is diagonal in the svd basis with
            // greedy weights min(remaining trace budget, w1/w0 cap)
            const Svd s = svd(x.items[0]);
            const std::size_t d = s.singulars.size();
            std::vector<double> dw(d, 0.0);
            double budget_left = w0; // trace-norm budget of the dual element
            const double cap = w1;   // operator-norm cap
            for (std::size_t i = 0; i < d && budget_left > 0.0; ++i) {
                dw[i] = std::min(cap, budget_left);
                budget_left -= dw[i];
            }
            MatrixSeq wseq = seq_zero_like(x);
            for (std::size_t i = 0; i < d; ++i) {
                if (dw[i] == 0.0) continue;
                for (std::size_t r = 0; r < x.rows(); ++r) {
                    const cx ur = dw[i] * s.left(r, i);
                    for (std::size_t cc = 0; cc < x.cols(); ++cc)
                        wseq.items[0](r, cc) += ur * std::conj(s.right(cc, i));
                }
            }
            ws.push_back(std::move(wseq));
        }
        const Exponents d0 = e0.dual();
        const Exponents d1 = e1.dual();
        for (const auto& w : ws) {
            const double num = seq_hs_inner(x, w);
            if (!(num > 0.0)) continue;
            double sum_up = std::min(seq_norm_eval(w, NormKind::Row, d0),
                                     seq_norm_eval(w, NormKind::Col, d0));
            if (refine) {
                SplitResult s = minimize_split(w, {NormKind::Row, d0, 1.0},
                                               {NormKind::Col, d0, 1.0}, 120, seed + 31);
                sum_up = std::min(sum_up, s.cost);
            }
            const double dr = seq_norm_eval(w, NormKind::Row, d1);
            const double dc = seq_norm_eval(w, NormKind::Col, d1);
            const double den = std::max(sum_up / w0, std::max(dr, dc) / w1);
            if (den > 0.0) lower = std::max(lower, num / den);
        }
    };
    refresh_lower(false);

    const double tol_rel = 1e-4;
    auto done = [&]() { return best_cost - lower <= tol_rel * std::max(best_cost, 1e-300); };

    if (!done() && budget > 0) {
        MatrixSeq y = best_y, z = best_z;
        for (int it = 0; it < budget; ++it, ++res.iterations) {
            const MatrixSeq a0 = seq_sub(seq_sub(x, y), z);
            NormValueGrad gi = seq_norm_with_grad(a0, NormKind::Intersect, e0);
            NormValueGrad gy = seq_norm_with_grad(y, NormKind::Row, e1);
            NormValueGrad gz = seq_norm_with_grad(z, NormKind::Col, e1);
            const double j = w0 * gi.value + w1 * (gy.value + gz.value);
            if (j < best_cost) {
                best_cost = j;
                best_y = y;
                best_z = z;
            }
            MatrixSeq grad_y = seq_zero_like(x);
            MatrixSeq grad_z = seq_zero_like(x);
            if (!gi.grad.items.empty()) {
                grad_y = seq_sub(grad_y, seq_scale(cx(w0, 0.0), gi.grad));
                grad_z = seq_sub(grad_z, seq_scale(cx(w0, 0.0), gi.grad));
            }
            if (!gy.grad.items.empty()) grad_y = seq_add(grad_y, seq_scale(cx(w1, 0.0), gy.grad));
            if (!gz.grad.items.empty()) grad_z = seq_add(grad_z, seq_scale(cx(w1, 0.0), gz.grad));
            const double gn = std::sqrt(grad_y.frobenius() * grad_y.frobenius() +
                                        grad_z.frobenius() * grad_z.frobenius());
            if (gn < 1e-30) break;
            const double target = lower > 0.0 ? lower * 0.999 : best_cost * 0.9;
            double step = (j - target) / (gn * gn);
            step = std::max(step, 1e-4 * xfro / gn);
            step = std::min(step, 2.0 * xfro / gn);
            y = seq_sub(y, seq_scale(cx(step, 0.0), grad_y));
            z = seq_sub(z, seq_scale(cx(step, 0.0), grad_z));
            if (it % 40 == 39) {
                refresh_lower(false);
                if (done()) break;
            }
        }
        res.budget_exhausted = res.iterations >= budget && !done();
    }
    refresh_lower(x.items.size() > 1);

    res.y = std::move(best_y);
    res.z = std::move(best_z);
    res.a0 = seq_sub(seq_sub(x, res.y), res.z);
    res.cost = best_cost;
    res.lower = std::min(lower, best_cost);
    res.gap = res.cost - res.lower;
    return res;
}

} // namespace rowcol::detail

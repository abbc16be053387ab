#include "rowcol/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "rowcol/errors.hpp"
#include "rowcol/rng.hpp"

namespace rowcol {

namespace {

double off_diag_sq(const ComplexMatrix& w) {
    double s = 0.0;
    const std::size_t n = w.rows();
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(w(p, q));
    return s;
}

void sort_descending(std::vector<double>& vals, ComplexMatrix* vecs) {
    const std::size_t n = vals.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    std::vector<double> sv(n);
    for (std::size_t k = 0; k < n; ++k) sv[k] = vals[idx[k]];
    vals = std::move(sv);
    if (vecs) {
        ComplexMatrix out(vecs->rows(), vecs->cols());
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < vecs->rows(); ++i) out(i, k) = (*vecs)(i, idx[k]);
        *vecs = std::move(out);
    }
}

// One cyclic Jacobi pass structure shared by the vector and no-vector paths.
void jacobi_core(ComplexMatrix& w, ComplexMatrix* v, double fro) {
    const std::size_t n = w.rows();
    const double conv = 1e-13 * fro;
    const double conv_sq = conv * conv;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diag_sq(w) <= conv_sq) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx wpq = w(p, q);
                const double a = std::abs(wpq);
                if (a < 1e-300) continue;
                const cx u = wpq / a;
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const double tau = (aqq - app) / (2.0 * a);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J[p][p] = c, J[p][q] = s u, J[q][p] = -s conj(u), J[q][q] = c
                const cx su = s * u;
                const cx suc = s * std::conj(u);
                // W <- W J
                for (std::size_t k = 0; k < n; ++k) {
                    const cx wp = w(k, p), wq = w(k, q);
                    w(k, p) = c * wp - suc * wq;
                    w(k, q) = su * wp + c * wq;
                }
                // W <- J* W
                for (std::size_t k = 0; k < n; ++k) {
                    const cx wp = w(p, k), wq = w(q, k);
                    w(p, k) = c * wp - su * wq;
                    w(q, k) = suc * wp + c * wq;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = w(p, p).real();
                w(q, q) = w(q, q).real();
                if (v) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cx vp = (*v)(k, p), vq = (*v)(k, q);
                        (*v)(k, p) = c * vp - suc * vq;
                        (*v)(k, q) = su * vp + c * vq;
                    }
                }
            }
        }
    }
    if (off_diag_sq(w) > conv_sq)
        throw NoConvergence("jacobi sweep cap (100) exceeded");
}

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// (diag d, subdiag e); eigenvalue-only path, phases dropped.
void tridiagonalize(ComplexMatrix w, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = w.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        std::vector<cx> x(m);
        double sigma_sq = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            x[j] = w(k + 1 + j, k);
            sigma_sq += std::norm(x[j]);
        }
        const double sigma = std::sqrt(sigma_sq);
        if (sigma == 0.0) {
            e[k + 1] = 0.0;
            continue;
        }
        cx phase = cx(1.0, 0.0);
        if (std::abs(x[0]) > 0.0) phase = x[0] / std::abs(x[0]);
        const cx alpha = -phase * sigma;
        std::vector<cx> v = x;
        v[0] -= alpha;
        double vnorm_sq = 0.0;
        for (const cx& c : v) vnorm_sq += std::norm(c);
        e[k + 1] = std::abs(alpha);
        w(k + 1, k) = alpha;
        w(k, k + 1) = std::conj(alpha);
        for (std::size_t j = 1; j < m; ++j) {
            w(k + 1 + j, k) = 0.0;
            w(k, k + 1 + j) = 0.0;
        }
        if (vnorm_sq < 1e-300) continue;
        const double beta = 2.0 / vnorm_sq;
        // u = beta * B v on the trailing block B = w[k+1.., k+1..]
        std::vector<cx> u(m, cx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            cx acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += w(k + 1 + i, k + 1 + j) * v[j];
            u[i] = beta * acc;
        }
        cx vu = 0.0;
        for (std::size_t i = 0; i < m; ++i) vu += std::conj(v[i]) * u[i];
        const cx kappa = 0.5 * beta * vu;
        std::vector<cx> ww(m);
        for (std::size_t i = 0; i < m; ++i) ww[i] = u[i] - kappa * v[i];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                w(k + 1 + i, k + 1 + j) -= v[i] * std::conj(ww[j]) + ww[i] * std::conj(v[j]);
    }
    if (n >= 2) e[n - 1] = std::abs(w(n - 1, n - 2));
    for (std::size_t i = 0; i < n; ++i) d[i] = w(i, i).real();
    // shift e so e[i] couples d[i] and d[i+1]
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
}

// Implicit-shift QL on a symmetric tridiagonal, eigenvalues only.
void tql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NoConvergence("tridiagonal QL iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& a) {
    ComplexMatrix w = a;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return w;
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, double tol) {
    if (!a.square()) throw NotHermitian("hermitian_eig requires a square matrix");
    const double fro = a.frobenius();
    if (a.hermitian_defect() > tol * fro)
        throw NotHermitian("matrix is not Hermitian within tolerance");
    const std::size_t n = a.rows();
    ComplexMatrix w = symmetrized(a);
    ComplexMatrix v = ComplexMatrix::identity(n);
    if (fro > 0.0) jacobi_core(w, &v, fro);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = w(i, i).real();
    sort_descending(vals, &v);
    return {std::move(vals), std::move(v)};
}

namespace detail {

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    ComplexMatrix w = symmetrized(a);
    const double fro = w.frobenius();
    std::vector<double> vals(n);
    if (fro == 0.0) return std::vector<double>(n, 0.0);
    if (n <= 48) {
        jacobi_core(w, nullptr, fro);
        for (std::size_t i = 0; i < n; ++i) vals[i] = w(i, i).real();
    } else {
        std::vector<double> e;
        tridiagonalize(std::move(w), vals, e);
        tql_eigenvalues(vals, e);
    }
    sort_descending(vals, nullptr);
    return vals;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) return singular_values(a.adjoint());
    const ComplexMatrix b = matmul(a.adjoint(), a);
    std::vector<double> lam = hermitian_eigenvalues(b);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::sqrt(std::max(lam[i], 0.0));
    return s;
}

} // namespace detail

Svd svd(const ComplexMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) {
        Svd t = svd(a.adjoint());
        return {std::move(t.singulars), std::move(t.right), std::move(t.left)};
    }
    ComplexMatrix b = matmul(a.adjoint(), a);
    HermitianEig eig = hermitian_eig(b, 1e-6);
    ComplexMatrix v = std::move(eig.eigenvectors);
    std::vector<double> sing(n);
    for (std::size_t i = 0; i < n; ++i) sing[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));

    // deterministic phase: the largest-magnitude entry of each right vector
    // is made real positive
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double mag = std::abs(v(i, j));
            if (mag > best) {
                best = mag;
                imax = i;
            }
        }
        if (best > 0.0) {
            const cx ph = v(imax, j) / best;
            for (std::size_t i = 0; i < n; ++i) v(i, j) *= std::conj(ph);
        }
    }

    ComplexMatrix u(m, m);
    const double cutoff = (sing.empty() ? 0.0 : sing.front()) * 1e-13;
    std::size_t filled = 0;
    for (std::size_t j = 0; j < n && j < m; ++j) {
        if (sing[j] <= cutoff) break;
        double norm_sq = 0.0;
        std::vector<cx> col(m, cx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            cx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * v(k, j);
            col[i] = acc / sing[j];
            norm_sq += std::norm(col[i]);
        }
        const double norm = std::sqrt(norm_sq);
        for (std::size_t i = 0; i < m; ++i) u(i, filled) = norm > 0.0 ? col[i] / norm : col[i];
        ++filled;
    }
    // complete to an orthonormal basis from standard vectors, best residual first
    while (filled < m) {
        std::size_t best_i = 0;
        double best_norm = -1.0;
        std::vector<cx> best_col;
        for (std::size_t cand = 0; cand < m; ++cand) {
            std::vector<cx> col(m, cx(0.0, 0.0));
            col[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < filled; ++k) {
                    cx proj = 0.0;
                    for (std::size_t i = 0; i < m; ++i) proj += std::conj(u(i, k)) * col[i];
                    for (std::size_t i = 0; i < m; ++i) col[i] -= proj * u(i, k);
                }
            }
            double norm_sq = 0.0;
            for (const cx& c : col) norm_sq += std::norm(c);
            const double norm = std::sqrt(norm_sq);
            if (norm > best_norm) {
                best_norm = norm;
                best_i = cand;
                best_col = std::move(col);
            }
        }
        (void)best_i;
        for (std::size_t i = 0; i < m; ++i) u(i, filled) = best_col[i] / best_norm;
        ++filled;
    }
    return {std::move(sing), std::move(u), std::move(v)};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    HermitianEig eig = hermitian_eig(a, 1e-10);
    const std::size_t n = a.rows();
    double max_abs = 0.0;
    for (double lam : eig.eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
    if (max_abs == 0.0) return ComplexMatrix(n, n);
    for (double lam : eig.eigenvalues)
        if (lam < -1e-8 * max_abs)
            throw NotPsd("matrix has a significantly negative eigenvalue");
    ComplexMatrix b(n, n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        if (s == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cx vik = s * v(i, k);
            for (std::size_t j = 0; j < n; ++j) b(i, j) += vik * std::conj(v(j, k));
        }
    }
    return symmetrized(b);
}

MatrixFamily family_from_string(const std::string& s) {
    if (s == "ginibre") return MatrixFamily::ginibre;
    if (s == "hermitian") return MatrixFamily::hermitian;
    if (s == "diagonal") return MatrixFamily::diagonal;
    if (s == "rank_one") return MatrixFamily::rank_one;
    throw ConfigError("unknown matrix family: " + s);
}

std::string family_to_string(MatrixFamily f) {
    switch (f) {
        case MatrixFamily::ginibre: return "ginibre";
        case MatrixFamily::hermitian: return "hermitian";
        case MatrixFamily::diagonal: return "diagonal";
        case MatrixFamily::rank_one: return "rank_one";
    }
    return "?";
}

namespace {

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.cnormal();
    return g;
}

} // namespace

MatrixSeq random_instance(std::uint64_t seed, std::size_t n, std::size_t N, MatrixFamily family) {
    if (n < 1 || N < 1) throw PreconditionViolated("random_instance requires n >= 1 and N >= 1");
    MatrixSeq x;
    x.items.reserve(N);
    for (std::size_t k = 0; k < N; ++k) {
        Rng rng = Rng::stream(seed, k);
        switch (family) {
            case MatrixFamily::ginibre:
                x.items.push_back(ginibre(rng, n, n));
                break;
            case MatrixFamily::hermitian: {
                ComplexMatrix g = ginibre(rng, n, n);
                ComplexMatrix h = g.adjoint();
                h += g;
                h *= cx(0.5, 0.0);
                x.items.push_back(std::move(h));
                break;
            }
            case MatrixFamily::diagonal: {
                ComplexMatrix d(n, n);
                for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.cnormal();
                x.items.push_back(std::move(d));
                break;
            }
            case MatrixFamily::rank_one: {
                std::vector<cx> u(n), v(n);
                for (auto& c : u) c = rng.cnormal();
                for (auto& c : v) c = rng.cnormal();
                ComplexMatrix r(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) r(i, j) = u[i] * std::conj(v[j]);
                x.items.push_back(std::move(r));
                break;
            }
        }
    }
    return x;
}

ComplexMatrix haar_unitary(std::uint64_t seed, std::size_t n) {
    Rng rng = Rng::stream(seed, 0x48414152ULL);
    ComplexMatrix z = ginibre(rng, n, n);
    // modified Gram-Schmidt QR; positive diagonal of R makes Q Haar
    ComplexMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<cx> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = z(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cx proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * col[i];
                for (std::size_t i = 0; i < n; ++i) col[i] -= proj * q(i, k);
            }
        }
        double norm_sq = 0.0;
        for (const cx& c : col) norm_sq += std::norm(c);
        const double norm = std::sqrt(norm_sq);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / norm;
    }
    return q;
}

using nlohmann::json;

namespace {

json matrix_to_json_obj(const ComplexMatrix& a) {
    json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    std::vector<double> re(a.data().size()), im(a.data().size());
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        re[k] = a.data()[k].real();
        im[k] = a.data()[k].imag();
    }
    j["re"] = re;
    j["im"] = im;
    return j;
}

ComplexMatrix matrix_from_json_obj(const json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != rows * cols || im.size() != rows * cols)
        throw ConfigError("matrix JSON: re/im length does not match rows*cols");
    ComplexMatrix a(rows, cols);
    for (std::size_t k = 0; k < re.size(); ++k) a.data()[k] = cx(re[k], im[k]);
    if (!a.all_finite()) throw ConfigError("matrix JSON: non-finite entry");
    return a;
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& a) { return matrix_to_json_obj(a).dump(); }

std::string seq_to_json(const MatrixSeq& x) {
    json arr = json::array();
    for (const auto& m : x.items) arr.push_back(matrix_to_json_obj(m));
    return arr.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    return matrix_from_json_obj(json::parse(text));
}

MatrixSeq seq_from_json(const std::string& text) {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw ConfigError("matrix sequence JSON must be an array");
    MatrixSeq x;
    for (const auto& j : arr) x.items.push_back(matrix_from_json_obj(j));
    if (!x.same_shape()) throw ConfigError("matrix sequence JSON: mixed shapes");
    return x;
}

MatrixSeq seq_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return seq_from_json(ss.str());
}

void seq_to_json_file(const MatrixSeq& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << seq_to_json(x) << "\n";
}

} // namespace rowcol

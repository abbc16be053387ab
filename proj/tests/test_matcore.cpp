#include <doctest.h>

#include <cmath>
#include <complex>

#include "rowcol/errors.hpp"
#include "rowcol/matcore.hpp"
#include "rowcol/rng.hpp"

using namespace rowcol;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

double recon_error(const ComplexMatrix& a, const HermitianEig& e) {
    const std::size_t n = a.rows();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += e.eigenvalues[k] * e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
    r -= a;
    return r.frobenius();
}

double orthonormality_defect(const ComplexMatrix& v) {
    const ComplexMatrix g = matmul(v.adjoint(), v);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? cx(1.0) : cx(0.0))));
    return worst;
}

} // namespace

TEST_CASE("hermitian_eig identity and symmetry-forced spectra") {
    const auto e3 = hermitian_eig(ComplexMatrix::identity(3));
    REQUIRE(e3.eigenvalues.size() == 3);
    for (double v : e3.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix flip(2, 2);
    flip(0, 1) = 1.0;
    flip(1, 0) = 1.0;
    const auto ef = hermitian_eig(flip);
    CHECK(ef.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ef.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig recovers a planted spectrum") {
    const ComplexMatrix q = haar_unitary(11, 3);
    const double lam[3] = {5.0, 2.0, -1.0};
    ComplexMatrix a(3, 3);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) += lam[k] * q(i, k) * std::conj(q(j, k));
    const auto e = hermitian_eig(a);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(e.eigenvalues[k] - lam[k]) < 1e-9);
}

TEST_CASE("hermitian_eig invariants on random instances") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const MatrixSeq x = random_instance(seed, 6, 1, MatrixFamily::hermitian);
        const ComplexMatrix& a = x.items[0];
        const auto e = hermitian_eig(a);
        CHECK(recon_error(a, e) <= 1e-10 * (1.0 + a.frobenius()));
        CHECK(orthonormality_defect(e.eigenvectors) <= 1e-12);
        double sum = 0.0;
        for (double v : e.eigenvalues) sum += v;
        CHECK(std::abs(sum - a.trace().real()) <= 1e-9 * (1.0 + std::abs(a.trace().real())));
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0; // A* has the 1 at (1,0)
    CHECK_THROWS_AS(hermitian_eig(a), NotHermitian);
}

TEST_CASE("svd diagonal and zero cases") {
    const Svd s = svd(diag2(3.0, 1.0));
    CHECK(s.singulars[0] == doctest::Approx(3.0));
    CHECK(s.singulars[1] == doctest::Approx(1.0));

    const Svd z = svd(ComplexMatrix(3, 2));
    for (double v : z.singulars) CHECK(v == 0.0);
    CHECK(orthonormality_defect(z.left) <= 1e-12);
    CHECK(orthonormality_defect(z.right) <= 1e-12);
}

TEST_CASE("svd of A and A* share singular values") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const MatrixSeq x = random_instance(seed, 4, 1, MatrixFamily::ginibre);
        const Svd sa = svd(x.items[0]);
        const Svd sb = svd(x.items[0].adjoint());
        REQUIRE(sa.singulars.size() == sb.singulars.size());
        for (std::size_t i = 0; i < sa.singulars.size(); ++i)
            CHECK(sa.singulars[i] == doctest::Approx(sb.singulars[i]).epsilon(1e-10));
    }
}

TEST_CASE("svd reconstruction and unitarity, including rectangular") {
    Rng rng(42);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{5, 3}, {3, 5}, {4, 4}}) {
        ComplexMatrix a(m, n);
        for (auto& c : a.data()) c = rng.cnormal();
        const Svd s = svd(a);
        ComplexMatrix r(m, n);
        const std::size_t k = std::min(m, n);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    r(i, j) += s.singulars[t] * s.left(i, t) * std::conj(s.right(j, t));
        r -= a;
        CHECK(r.frobenius() <= 1e-10 * (1.0 + a.frobenius()));
        CHECK(orthonormality_defect(s.left) <= 1e-12);
        CHECK(orthonormality_defect(s.right) <= 1e-12);
    }
}

TEST_CASE("singular values are unitarily invariant") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        const ComplexMatrix a = random_instance(seed, 5, 1, MatrixFamily::ginibre).items[0];
        const ComplexMatrix u = haar_unitary(seed + 100, 5);
        const ComplexMatrix v = haar_unitary(seed + 200, 5);
        const Svd s0 = svd(a);
        const Svd s1 = svd(matmul(matmul(u, a), v));
        for (std::size_t i = 0; i < s0.singulars.size(); ++i)
            CHECK(std::abs(s0.singulars[i] - s1.singulars[i]) <= 1e-9 * (1.0 + s0.singulars[0]));
    }
}

TEST_CASE("psd_sqrt closed forms") {
    const ComplexMatrix r = psd_sqrt(diag2(4.0, 9.0));
    CHECK(std::abs(r(0, 0) - cx(2.0)) < 1e-10);
    CHECK(std::abs(r(1, 1) - cx(3.0)) < 1e-10);

    const ComplexMatrix i3 = psd_sqrt(ComplexMatrix::identity(3));
    CHECK((i3 - ComplexMatrix::identity(3)).frobenius() < 1e-10);

    // rank one: (vv*)^{1/2} = vv*/||v||
    Rng rng(5);
    std::vector<cx> v(3);
    for (auto& c : v) c = rng.cnormal();
    double norm = 0.0;
    for (const auto& c : v) norm += std::norm(c);
    norm = std::sqrt(norm);
    for (auto& c : v) c *= 2.0 / norm; // make ||v|| = 2
    ComplexMatrix vv(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) vv(i, j) = v[i] * std::conj(v[j]);
    // sqrt amplifies roundoff near zero eigenvalues by eps^{1/2}
    const ComplexMatrix s = psd_sqrt(vv);
    ComplexMatrix expect = vv;
    expect *= cx(0.5, 0.0);
    CHECK((s - expect).frobenius() < 1e-7);
}

TEST_CASE("psd_sqrt rejects significantly negative spectra") {
    CHECK_THROWS_AS(psd_sqrt(diag2(1.0, -1.0)), NotPsd);
}

TEST_CASE("psd_sqrt squares back and is monotone on commuting pairs") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const MatrixSeq x = random_instance(seed, 5, 3, MatrixFamily::ginibre);
        ComplexMatrix g(5, 5);
        for (const auto& m : x.items) g += matmul(m, m.adjoint());
        const ComplexMatrix b = psd_sqrt(g);
        CHECK((matmul(b, b) - g).frobenius() <= 1e-9 * (1.0 + g.frobenius()));
    }
    Rng rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix a(4, 4), b(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            const double lo = std::abs(rng.normal());
            a(i, i) = lo;
            b(i, i) = lo + std::abs(rng.normal());
        }
        const ComplexMatrix sa = psd_sqrt(a), sb = psd_sqrt(b);
        for (std::size_t i = 0; i < 4; ++i) CHECK(sa(i, i).real() <= sb(i, i).real() + 1e-12);
    }
}

TEST_CASE("random_instance determinism and families") {
    const MatrixSeq a = random_instance(7, 2, 3, MatrixFamily::ginibre);
    const MatrixSeq b = random_instance(7, 2, 3, MatrixFamily::ginibre);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t k = 0; k < a.items.size(); ++k)
        for (std::size_t i = 0; i < a.items[k].data().size(); ++i)
            CHECK(a.items[k].data()[i] == b.items[k].data()[i]);

    const MatrixSeq d = random_instance(3, 4, 2, MatrixFamily::diagonal);
    for (const auto& m : d.items)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j) CHECK(m(i, j) == cx(0.0, 0.0));

    const MatrixSeq h = random_instance(4, 4, 2, MatrixFamily::hermitian);
    for (const auto& m : h.items) CHECK(m.hermitian_defect() < 1e-14);
}

TEST_CASE("ginibre entries have unit second moment") {
    double acc = 0.0;
    const std::size_t n = 64;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const MatrixSeq x = random_instance(1000 + seed, n, 1, MatrixFamily::ginibre);
        const double f = x.items[0].frobenius();
        acc += f * f / double(n * n);
    }
    acc /= 50.0;
    CHECK(acc > 0.9);
    CHECK(acc < 1.1);
}

TEST_CASE("matrix json round trip") {
    const MatrixSeq x = random_instance(21, 3, 2, MatrixFamily::ginibre);
    const MatrixSeq y = seq_from_json(seq_to_json(x));
    REQUIRE(y.items.size() == x.items.size());
    for (std::size_t k = 0; k < x.items.size(); ++k)
        for (std::size_t i = 0; i < x.items[k].data().size(); ++i)
            CHECK(x.items[k].data()[i] == y.items[k].data()[i]);
}

#include <doctest.h>

#include <cmath>

#include "rowcol/lorentz.hpp"
#include "rowcol/matcore.hpp"
#include "rowcol/rng.hpp"
#include "rowcol/seqnorms.hpp"

using namespace rowcol;

namespace {

// x = (e11, e12) in 2x2
MatrixSeq unit_row_pair() {
    MatrixSeq x;
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0;
    b(0, 1) = 1.0;
    x.items = {a, b};
    return x;
}

} // namespace

TEST_CASE("gram matrices") {
    const MatrixSeq x = unit_row_pair();
    const ComplexMatrix gr = gram_row(x);
    CHECK(std::abs(gr(0, 0) - cx(2.0)) < 1e-15);
    CHECK(std::abs(gr(1, 1)) < 1e-15);
    CHECK(std::abs(gr(0, 1)) < 1e-15);

    MatrixSeq id;
    id.items = {ComplexMatrix::identity(3)};
    CHECK((gram_row(id) - ComplexMatrix::identity(3)).frobenius() < 1e-15);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const MatrixSeq y = random_instance(seed, 4, 3, MatrixFamily::ginibre);
        MatrixSeq yadj;
        for (const auto& m : y.items) yadj.items.push_back(m.adjoint());
        CHECK((gram_row(y) - gram_col(yadj)).frobenius() < 1e-12);
    }
}

TEST_CASE("row and column norms, hand values") {
    const MatrixSeq x = unit_row_pair();
    const Exponents op{kInf, kInf}, tr{1.0, 1.0};
    CHECK(row_norm(x, op) == doctest::Approx(std::sqrt(2.0)));
    CHECK(col_norm(x, op) == doctest::Approx(1.0));
    CHECK(row_norm(x, tr) == doctest::Approx(std::sqrt(2.0)));
    CHECK(col_norm(x, tr) == doctest::Approx(2.0));
    CHECK(intersect_norm(x, op) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("single item: row equals column equals Schatten-Lorentz norm") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        MatrixSeq x = random_instance(seed, 4, 1, MatrixFamily::ginibre);
        for (auto [p, q] : {std::pair<double, double>{2.0, 2.0}, {1.0, 1.0}, {3.0, 1.0}, {kInf, kInf}}) {
            const Exponents e{p, q};
            const double direct = lorentz_norm(s_numbers(x.items[0], 1.0), e);
            CHECK(row_norm(x, e) == doctest::Approx(direct).epsilon(1e-10));
            CHECK(col_norm(x, e) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("intersect norm properties") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const MatrixSeq x = random_instance(seed, 3, 2, MatrixFamily::ginibre);
        const Exponents e{2.0, 2.0};
        CHECK(intersect_norm(x, e) >= row_norm(x, e) - 1e-12);
        CHECK(intersect_norm(x, e) >= col_norm(x, e) - 1e-12);
    }
    const MatrixSeq d = random_instance(4, 4, 3, MatrixFamily::diagonal);
    CHECK(intersect_norm(d, {kInf, kInf}) == doctest::Approx(row_norm(d, {kInf, kInf})));
}

TEST_CASE("sum_norm trivial and single-item cases") {
    MatrixSeq zero;
    zero.items = {ComplexMatrix(3, 3), ComplexMatrix(3, 3)};
    CHECK(sum_norm(zero, {1.0, 1.0}).cost == doctest::Approx(0.0));

    for (auto [p, q] : {std::pair<double, double>{1.0, 1.0}, {2.0, 2.0}, {kInf, kInf}}) {
        const MatrixSeq x = random_instance(9, 4, 1, MatrixFamily::ginibre);
        const Exponents e{p, q};
        const SumSplit s = sum_norm(x, e, 2000, 1);
        const double direct = row_norm(x, e);
        CHECK(s.cost == doctest::Approx(direct).epsilon(1e-9));
        CHECK(s.gap <= 1e-6 * std::max(1.0, s.cost));
    }
}

TEST_CASE("sum_norm feasible-point bound on (e11, e12)") {
    const MatrixSeq x = unit_row_pair();
    const SumSplit s = sum_norm(x, {1.0, 1.0}, 2000, 2);
    CHECK(s.cost <= std::sqrt(2.0) + 1e-8);
    CHECK(s.cost >= 1.0 - 1e-9);
    // split reconstructs
    const MatrixSeq back = seq_add(s.y, s.z);
    CHECK(seq_sub(back, x).frobenius() < 1e-10);
}

TEST_CASE("sum_norm bounded by each one-sided norm") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const MatrixSeq x = random_instance(seed, 3, 3, MatrixFamily::ginibre);
        for (auto [p, q] : {std::pair<double, double>{1.0, 1.0}, {kInf, kInf}}) {
            const Exponents e{p, q};
            const SumSplit s = sum_norm(x, e, 600, seed);
            CHECK(s.cost <= std::min(row_norm(x, e), col_norm(x, e)) + 1e-9);
        }
    }
}

TEST_CASE("sum_norm triangle inequality via certified lower bounds") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const MatrixSeq x = random_instance(seed, 3, 2, MatrixFamily::ginibre);
        const MatrixSeq y = random_instance(seed + 50, 3, 2, MatrixFamily::ginibre);
        const Exponents e{1.0, 1.0};
        const SumSplit sx = sum_norm(x, e, 800, 3);
        const SumSplit sy = sum_norm(y, e, 800, 3);
        const SumSplit sxy = sum_norm(seq_add(x, y), e, 800, 3);
        CHECK(sxy.cost - sxy.gap <= sx.cost + sy.cost + 1e-9);
    }
}

TEST_CASE("duality pairing against the intersect norm") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const MatrixSeq x = random_instance(seed, 3, 2, MatrixFamily::ginibre);
        const MatrixSeq y = random_instance(seed + 100, 3, 2, MatrixFamily::ginibre);
        const double pair = std::abs(bilinear_pairing(x, y));
        const double bound = intersect_norm(x, {kInf, kInf}) * sum_norm(y, {1.0, 1.0}, 800, 5).cost;
        CHECK(pair <= bound * (1.0 + 1e-9) + 1e-12);
    }
}

#include <doctest.h>

#include "majorkit/birkhoff.hpp"
#include "majorkit/matrix_major.hpp"
#include "majorkit/reductions.hpp"
#include "majorkit/vector_major.hpp"

using namespace majorkit;

namespace {

RMatrix worked_a() {
    RMatrix a(2, 4);
    a.set_row(0, RVector{rat(-1), rat(-2), rat(4), rat(-6)});
    a.set_row(1, RVector{rat(1), rat(-4), rat(2), rat(-6)});
    return a;
}

RMatrix worked_b() {
    RMatrix b(2, 4);
    b.set_row(0, RVector{rat(3), rat(-6), rat(0), rat(-6)});
    b.set_row(1, RVector{rat(-3), rat(0), rat(6), rat(-6)});
    return b;
}

RMatrix replay_shift(const RMatrix& x, const ReductionCertificate& c) {
    const RMatrix shifted = x + RMatrix::ones(x.rows(), x.cols()) * c.lambda;
    const RMatrix scaled = shifted * (Rational(1) / *c.mu);
    RVector ones(x.rows());
    for (int i = 0; i < x.rows(); ++i) ones[i] = 1;
    return scaled + RMatrix::outer(ones, *c.v);
}

RMatrix replay_diag(const RMatrix& x, const ReductionCertificate& c) {
    const RMatrix shifted = x + RMatrix::ones(x.rows(), x.cols()) * c.lambda;
    RMatrix out(x.rows(), x.cols());
    for (int j = 0; j < x.cols(); ++j) out.set_column(j, shifted.column(j) / (*c.d_diag)[j]);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("shift-normalize reproduces the worked example under pinned lambda, mu") {
    const auto r = reduce_shift_normalize(worked_a(), worked_b(), rat(6), rat(20));

    RMatrix expect_a(2, 4), expect_b(2, 4);
    expect_a.set_row(0, RVector{rat(9, 20), rat(11, 20), rat(11, 20), rat(1, 2)});
    expect_a.set_row(1, RVector{rat(11, 20), rat(9, 20), rat(9, 20), rat(1, 2)});
    expect_b.set_row(0, RVector{rat(13, 20), rat(7, 20), rat(7, 20), rat(1, 2)});
    expect_b.set_row(1, RVector{rat(7, 20), rat(13, 20), rat(13, 20), rat(1, 2)});
    CHECK(r.a_prime == expect_a);
    CHECK(r.b_prime == expect_b);
    CHECK(is_column_stochastic(r.b_prime));
    CHECK(is_column_stochastic(r.a_prime));
    CHECK(*r.certificate.v == RVector{rat(1, 5), rat(7, 20), rat(1, 20), rat(1, 2)});

    // Replaying the certificate reproduces the outputs exactly.
    CHECK(replay_shift(worked_a(), r.certificate) == r.a_prime);
    CHECK(replay_shift(worked_b(), r.certificate) == r.b_prime);
}

TEST_CASE("diag-scale reproduces the second worked example under pinned lambda") {
    const auto r = reduce_diag_scale(worked_a(), worked_b(), rat(7));
    CHECK(*r.certificate.d_diag == RVector{rat(14), rat(8), rat(20), rat(2)});

    RMatrix expect_a(2, 4), expect_b(2, 4);
    expect_a.set_row(0, RVector{rat(6, 14), rat(5, 8), rat(11, 20), rat(1, 2)});
    expect_a.set_row(1, RVector{rat(8, 14), rat(3, 8), rat(9, 20), rat(1, 2)});
    expect_b.set_row(0, RVector{rat(10, 14), rat(1, 8), rat(7, 20), rat(1, 2)});
    expect_b.set_row(1, RVector{rat(4, 14), rat(7, 8), rat(13, 20), rat(1, 2)});
    CHECK(r.a_prime == expect_a);
    CHECK(r.b_prime == expect_b);
    CHECK(is_column_stochastic(r.b_prime));

    CHECK(replay_diag(worked_a(), r.certificate) == r.a_prime);
    CHECK(replay_diag(worked_b(), r.certificate) == r.b_prime);
}

TEST_CASE("canonical parameters on the worked pair") {
    // Minimal nonnegative shift is 6; the diag method bumps to 7 because
    // column 4 of B + 6J vanishes.
    const auto shift = reduce_shift_normalize(worked_a(), worked_b());
    CHECK(shift.certificate.lambda == rat(6));
    CHECK(*shift.certificate.mu == rat(18));
    const auto diag = reduce_diag_scale(worked_a(), worked_b());
    CHECK(diag.certificate.lambda == rat(7));

    // Pinned parameters are validated.
    CHECK_THROWS_AS(reduce_shift_normalize(worked_a(), worked_b(), rat(3)), precondition_error);
    CHECK_THROWS_AS(reduce_shift_normalize(worked_a(), worked_b(), rat(6), rat(10)),
                    precondition_error);
    CHECK_THROWS_AS(reduce_diag_scale(worked_a(), worked_b(), rat(6)), precondition_error);
    CHECK_THROWS_AS(reduce_shift_normalize(worked_a(), RMatrix(2, 3)), dimension_error);
}

TEST_CASE("column stochastic pairs are fixed points") {
    Rng rng(97);
    const RMatrix a = random_column_stochastic(3, 4, rng);
    const auto shift = reduce_shift_normalize(a, a);
    CHECK(shift.certificate.lambda == rat(0));
    CHECK(*shift.certificate.mu == rat(1));
    CHECK(shift.a_prime == a);
    CHECK(shift.b_prime == a);
    for (int j = 0; j < 4; ++j) CHECK((*shift.certificate.v)[j] == 0);

    const auto diag = reduce_diag_scale(a, a);
    CHECK(diag.certificate.lambda == rat(0));
    CHECK(diag.a_prime == a);
}

TEST_CASE("reductions preserve the strong verdict") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int m = static_cast<int>(rng.between(1, 3));
        RMatrix a = random_matrix(n, m, rng);
        const RMatrix b = random_matrix(n, m, rng);
        if (rng.below(2)) a = random_doubly_stochastic(n, 2, rng) * b;
        const bool verdict = check_strong(a, b).holds();

        const auto shift = reduce_shift_normalize(a, b);
        CHECK(is_column_stochastic(shift.b_prime));
        CHECK(check_strong(shift.a_prime, shift.b_prime).holds() == verdict);
        if (verdict) CHECK(is_column_stochastic(shift.a_prime));

        const auto diag = reduce_diag_scale(a, b);
        CHECK(is_column_stochastic(diag.b_prime));
        CHECK(check_strong(diag.a_prime, diag.b_prime).holds() == verdict);
        if (verdict) CHECK(is_column_stochastic(diag.a_prime));
    }
}

TEST_CASE("reductions preserve the weak verdict; anchor A makes A' column stochastic") {
    Rng rng(103);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int m = static_cast<int>(rng.between(1, 3));
        RMatrix a = random_matrix(n, m, rng);
        const RMatrix b = random_matrix(n, m, rng);
        const bool verdict = check_weak(a, b).holds();

        const auto shift = reduce_shift_normalize(a, b);
        CHECK(check_weak(shift.a_prime, shift.b_prime).holds() == verdict);

        const auto anchored_a =
            reduce_shift_normalize(a, b, std::nullopt, std::nullopt, ReduceAnchor::A);
        CHECK(is_column_stochastic(anchored_a.a_prime));
        CHECK(check_weak(anchored_a.a_prime, anchored_a.b_prime).holds() == verdict);

        const auto diag_a = reduce_diag_scale(a, b, std::nullopt, ReduceAnchor::A);
        CHECK(is_column_stochastic(diag_a.a_prime));
        CHECK(check_weak(diag_a.a_prime, diag_a.b_prime).holds() == verdict);
    }
}

TEST_CASE("reductions preserve equality of column sums") {
    Rng rng(229);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int m = static_cast<int>(rng.between(1, 3));
        RMatrix a = random_matrix(n, m, rng);
        RMatrix b = random_matrix(n, m, rng);
        if (rng.below(2)) {
            for (int j = 0; j < m; ++j) {
                const Rational gap = (a.column(j).sum() - b.column(j).sum()) / n;
                for (int i = 0; i < n; ++i) b.at(i, j) += gap;
            }
        }
        const bool equal_before = a.column_sums() == b.column_sums();
        const auto shift = reduce_shift_normalize(a, b);
        const auto diag = reduce_diag_scale(a, b);
        CHECK((shift.a_prime.column_sums() == shift.b_prime.column_sums()) == equal_before);
        CHECK((diag.a_prime.column_sums() == diag.b_prime.column_sums()) == equal_before);
    }
}

TEST_CASE("reductions preserve directional refutation status on sampled directions") {
    Rng rng(107);
    for (int t = 0; t < 25; ++t) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int m = static_cast<int>(rng.between(1, 3));
        RMatrix a = random_matrix(n, m, rng);
        const RMatrix b = random_matrix(n, m, rng);
        if (rng.below(2)) a = random_doubly_stochastic(n, 2, rng) * b;
        const std::uint64_t seed = rng.next();
        const auto before = check_directional(a, b, 10, seed);
        const auto shift = reduce_shift_normalize(a, b);
        const auto after = check_directional(shift.a_prime, shift.b_prime, 10, seed);
        CHECK((before.status == MajorizationVerdict::Status::Refuted) ==
              (after.status == MajorizationVerdict::Status::Refuted));
    }
}

TEST_CASE("theta normalizes columns") {
    RMatrix ones_col(3, 1);
    for (int i = 0; i < 3; ++i) ones_col.at(i, 0) = 1;
    const RMatrix t1 = theta(ones_col);
    for (int i = 0; i < 3; ++i) CHECK(t1.at(i, 0) == rat(1, 3));

    RMatrix two_ones(3, 1);
    two_ones.at(0, 0) = 1;
    two_ones.at(1, 0) = 1;
    const RMatrix t2 = theta(two_ones);
    CHECK(t2.column(0) == RVector{rat(1, 2), rat(1, 2), rat(0)});

    const RMatrix tz = theta(RMatrix::zero(4, 2));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 4; ++i) CHECK(tz.at(i, j) == rat(1, 4));

    // Negative column sums follow the formula literally.
    RMatrix neg(2, 1);
    neg.at(0, 0) = rat(-1);
    neg.at(1, 0) = rat(-3);
    const RMatrix tn = theta(neg);
    CHECK(tn.column(0) == RVector{rat(1, 4), rat(3, 4)});

    RMatrix zero_sum_col(2, 1);
    zero_sum_col.at(0, 0) = rat(1);
    zero_sum_col.at(1, 0) = rat(-1);
    CHECK_THROWS_AS(theta(zero_sum_col), precondition_error);

    Rng rng(109);
    for (int t = 0; t < 40; ++t) {
        RMatrix x = random_matrix(static_cast<int>(rng.between(1, 5)),
                                  static_cast<int>(rng.between(1, 4)), rng);
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) x.at(i, j) = abs(x.at(i, j));
        CHECK(is_column_stochastic(theta(x)));
    }
}

TEST_CASE("zero-one bridge: all five conditions coincide") {
    Rng rng(113);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int m = static_cast<int>(rng.between(1, 3));
        RMatrix b(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) b.at(i, j) = rng.below(2) ? 1 : 0;
        const RMatrix a = random_permutation(n, rng).apply_rows(b);
        const auto bridge = zero_one_bridge(a, b);
        CHECK(bridge.directional == bridge.strong);
        CHECK(bridge.strong == bridge.permutation);
        CHECK(bridge.permutation == bridge.theta_directional);
        CHECK(bridge.theta_directional == bridge.theta_strong);
        CHECK(bridge.strong); // row-permuted pairs always relate
    }

    // A pair with equal column sums that is NOT a row permutation fails all
    // five conditions.
    RMatrix a(3, 2), b(3, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1; // rows: (1,0), (0,1), (0,0)
    b.at(0, 0) = 1;
    b.at(0, 1) = 1; // rows: (1,1), (0,0), (0,0)
    const auto bridge = zero_one_bridge(a, b);
    CHECK_FALSE(bridge.directional);
    CHECK_FALSE(bridge.strong);
    CHECK_FALSE(bridge.permutation);
    CHECK_FALSE(bridge.theta_directional);
    CHECK_FALSE(bridge.theta_strong);
}

TEST_CASE("zero-one bridge preconditions, and the unequal-sums counterexample") {
    RMatrix a(3, 1), b(3, 1);
    for (int i = 0; i < 3; ++i) a.at(i, 0) = 1;
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    CHECK_THROWS_AS(zero_one_bridge(a, b), precondition_error);

    // Theta maps them to comparable distributions even though A, B are not:
    // the equal-column-sum hypothesis cannot be dropped.
    CHECK_FALSE(check_strong(a, b).holds());
    CHECK(check_strong(theta(a), theta(b)).holds());
    CHECK(RMatrix::ones(3, 3) * rat(1, 3) * theta(b) == theta(a));

    RMatrix not01(2, 2);
    not01.at(0, 0) = rat(1, 2);
    CHECK_THROWS_AS(zero_one_bridge(not01, not01), precondition_error);
}

TEST_SUITE_END();

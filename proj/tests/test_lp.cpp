#include <doctest.h>

#include "majorkit/birkhoff.hpp"
#include "majorkit/lp.hpp"

using namespace majorkit;

namespace {

FeasibilitySystem single_row(std::vector<Rational> coeffs, Rational rhs) {
    RMatrix e(1, static_cast<int>(coeffs.size()));
    for (int j = 0; j < e.cols(); ++j) e.at(0, j) = coeffs[static_cast<size_t>(j)];
    return FeasibilitySystem(std::move(e), RVector{rhs});
}

void check_outcome_sound(const FeasibilitySystem& sys, const FeasibilityOutcome& out) {
    if (out.feasible) {
        REQUIRE(out.witness.has_value());
        CHECK(out.witness->is_nonnegative());
        CHECK(sys.e * *out.witness == sys.f);
    } else {
        REQUIRE(out.certificate.has_value());
        const RVector yte = sys.e.transpose() * *out.certificate;
        for (int j = 0; j < yte.size(); ++j) CHECK(yte[j] <= 0);
        Rational ytf = 0;
        for (int i = 0; i < sys.f.size(); ++i) ytf += (*out.certificate)[i] * sys.f[i];
        CHECK(ytf > 0);
    }
}

} // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("x1 + x2 = 1 is feasible") {
    const auto sys = single_row({rat(1), rat(1)}, rat(1));
    const auto out = solve_feasibility(sys);
    REQUIRE(out.feasible);
    check_outcome_sound(sys, out);
}

TEST_CASE("x1 + x2 = -1 is infeasible with a one-line certificate") {
    const auto sys = single_row({rat(1), rat(1)}, rat(-1));
    const auto out = solve_feasibility(sys);
    REQUIRE_FALSE(out.feasible);
    check_outcome_sound(sys, out);
    CHECK((*out.certificate)[0] == rat(-1));
}

TEST_CASE("doubly stochastic D with D(1,0)^t = (1/2,1/2)^t exists") {
    // Unknowns d11 d12 d21 d22; constraints: row sums, column sums, image.
    RMatrix e(6, 4);
    RVector f(6);
    // d11 = 1/2, d21 = 1/2 (the image of (1,0)^t)
    e.at(0, 0) = 1;
    f[0] = rat(1, 2);
    e.at(1, 2) = 1;
    f[1] = rat(1, 2);
    // row sums
    e.at(2, 0) = e.at(2, 1) = 1;
    f[2] = 1;
    e.at(3, 2) = e.at(3, 3) = 1;
    f[3] = 1;
    // column sums
    e.at(4, 0) = e.at(4, 2) = 1;
    f[4] = 1;
    e.at(5, 1) = e.at(5, 3) = 1;
    f[5] = 1;
    const FeasibilitySystem sys(std::move(e), std::move(f));
    const auto out = solve_feasibility(sys);
    REQUIRE(out.feasible);
    check_outcome_sound(sys, out);
    // (1/2)J satisfies every constraint; the solver's vertex must too.
    RVector half{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    CHECK(sys.e * half == sys.f);
}

TEST_CASE("dimension mismatch is a structured error") {
    CHECK_THROWS_AS(FeasibilitySystem(RMatrix(2, 3), RVector(3)), dimension_error);
}

TEST_CASE("redundant rows are tolerated") {
    RMatrix e(3, 2);
    RVector f(3);
    e.at(0, 0) = 1;
    e.at(0, 1) = 2;
    f[0] = rat(4);
    e.at(1, 0) = 2;
    e.at(1, 1) = 4;
    f[1] = rat(8); // twice row 0
    e.at(2, 0) = 1;
    f[2] = rat(2);
    const FeasibilitySystem sys(std::move(e), std::move(f));
    const auto out = solve_feasibility(sys);
    REQUIRE(out.feasible);
    check_outcome_sound(sys, out);
}

TEST_CASE("soundness on random systems") {
    Rng rng(23);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int t = 0; t < 300; ++t) {
        const int k = static_cast<int>(rng.between(1, 6));
        const int nvars = static_cast<int>(rng.between(1, 8));
        const RMatrix e = random_matrix(k, nvars, rng);
        RVector f(k);
        if (rng.below(2)) {
            // Force feasibility: f = E x0 for a random nonnegative x0.
            RVector x0(nvars);
            for (int j = 0; j < nvars; ++j) x0[j] = rat(rng.between(0, 5), rng.between(1, 3));
            f = e * x0;
        } else {
            f = random_vector(k, rng);
        }
        const FeasibilitySystem sys(e, f);
        const auto out = solve_feasibility(sys);
        check_outcome_sound(sys, out);
        ++(out.feasible ? feasible_seen : infeasible_seen);
    }
    CHECK(feasible_seen > 50);
    CHECK(infeasible_seen > 50);
}

TEST_CASE("deterministic outcomes") {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        const RMatrix e = random_matrix(3, 5, rng);
        const RVector f = random_vector(3, rng);
        const auto out1 = solve_feasibility(FeasibilitySystem(e, f));
        const auto out2 = solve_feasibility(FeasibilitySystem(e, f));
        CHECK(out1.feasible == out2.feasible);
        if (out1.feasible) CHECK(*out1.witness == *out2.witness);
        else CHECK(*out1.certificate == *out2.certificate);
    }
}

TEST_SUITE_END();

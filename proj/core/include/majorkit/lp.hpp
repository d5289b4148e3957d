#ifndef MAJORKIT_LP_HPP
#define MAJORKIT_LP_HPP

#include <optional>

#include "majorkit/matrix.hpp"

namespace majorkit {

/// Linear feasibility instance: find x >= 0 with E x = f. Redundant equality
/// rows are permitted; they are detected during pivoting.
struct FeasibilitySystem {
    RMatrix e;
    RVector f;

    FeasibilitySystem(RMatrix e_, RVector f_) : e(std::move(e_)), f(std::move(f_)) {
        if (e.rows() != f.size())
            throw dimension_error("feasibility system: constraint matrix has " +
                                  std::to_string(e.rows()) + " rows but rhs has length " +
                                  std::to_string(f.size()));
    }
};

/// Either a nonnegative witness with E x = f exactly, or a Farkas certificate
/// y with y^t E <= 0 componentwise and y^t f > 0.
struct FeasibilityOutcome {
    bool feasible;
    std::optional<RVector> witness;      // set when feasible
    std::optional<RVector> certificate;  // set when infeasible

    static FeasibilityOutcome make_feasible(RVector x) { return {true, std::move(x), std::nullopt}; }
    static FeasibilityOutcome make_infeasible(RVector y) { return {false, std::nullopt, std::move(y)}; }
};

/// Phase-1 simplex over exact rationals with Bland's pivot rule (no cycling,
/// no perturbation). Artificial variables are driven out of the basis at the
/// optimum, so a feasible answer is a genuine vertex. The returned witness or
/// certificate re-verifies by exact substitution before being handed out.
FeasibilityOutcome solve_feasibility(const FeasibilitySystem& sys);

} // namespace majorkit

#endif

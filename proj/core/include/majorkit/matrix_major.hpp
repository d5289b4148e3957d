#ifndef MAJORKIT_MATRIX_MAJOR_HPP
#define MAJORKIT_MATRIX_MAJOR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "majorkit/lp.hpp"
#include "majorkit/matrix.hpp"

namespace majorkit {

enum class Relation { Vector, Strong, Weak, Directional, StrongEquiv };

std::string relation_name(Relation r);

/// Outcome of a matrix majorization query. Holds carries a stochastic witness
/// that re-verifies exactly; Refuted carries a direction v with Av not
/// majorized by Bv; NotRefuted reports how many directions were tried.
struct MajorizationVerdict {
    enum class Status { Holds, Fails, Refuted, NotRefuted };

    Relation relation;
    Status status;
    std::optional<RMatrix> witness;      // Holds: D (strong) or R (weak)
    std::optional<RVector> certificate;  // Fails: Farkas certificate when one exists
    std::optional<RVector> direction;    // Refuted: the violating direction
    long trials = 0;                     // NotRefuted: directions tried
    std::string reason;

    bool holds() const { return status == Status::Holds; }
};

/// Strong majorization A <=_s B: A = D B for some doubly stochastic D.
/// Screens equal column sums, then solves the exact feasibility system over
/// the n^2 entries of D. Holds returns the witness.
MajorizationVerdict check_strong(const RMatrix& a, const RMatrix& b);

/// Weak majorization A <=_w B: A = R B for some row stochastic R. Decomposes
/// into n independent feasibility problems, one per row of A.
MajorizationVerdict check_weak(const RMatrix& a, const RMatrix& b);

/// Directional majorization A <=_d B: A v majorized by B v for every v. Only
/// a semi-decision exists: equal-column-sum screen, the strong shortcut
/// (strong implies directional), exhaustive (0,1)-directions (m <= 16), then
/// `budget` seeded random rational directions. Refutations are exact and
/// final; NotRefuted is a confidence statement, not a proof.
MajorizationVerdict check_directional(const RMatrix& a, const RMatrix& b, long budget,
                                      std::uint64_t seed);

/// A ~_s B: permutation P with A = P B, found by greedy first-fit row
/// matching (any valid P is acceptable when rows repeat).
std::optional<Permutation> check_strong_equiv(const RMatrix& a, const RMatrix& b);

} // namespace majorkit

#endif

#ifndef MAJORKIT_REDUCTIONS_HPP
#define MAJORKIT_REDUCTIONS_HPP

#include <optional>

#include "majorkit/matrix.hpp"

namespace majorkit {

/// Which matrix the reduction normalizes to column stochastic form. Anchor B
/// is the default; anchor A is the weak-majorization variant, which makes A'
/// column stochastic instead.
enum class ReduceAnchor { B, A };

enum class ReductionMethod { ShiftNormalize, DiagScale };

/// Replayable record of a reduction: applying it to (A, B) reproduces
/// (A', B') exactly.
struct ReductionCertificate {
    ReductionMethod method;
    Rational lambda;
    // shift-normalize only:
    std::optional<Rational> mu;
    std::optional<RVector> v;
    // diag-scale only:
    std::optional<RVector> d_diag;
};

struct ReductionResult {
    RMatrix a_prime;
    RMatrix b_prime;
    ReductionCertificate certificate;
};

/// Shift-and-normalize reduction to column stochastic matrices:
/// A1 = A + lambda J, A2 = A1 / mu, A' = A2 + e v^t with
/// v^t = (1/n)(e^t - e^t B2). The anchored matrix becomes column stochastic
/// and the strong/weak/directional verdicts are preserved. Canonical choices
/// (used when the caller does not pin them): lambda = max(0, -most negative
/// entry of A and B); mu = max(1, largest column sum of A1 and B1). Pinned
/// values are validated (shifted matrices nonnegative, scaled column sums
/// <= 1).
ReductionResult reduce_shift_normalize(const RMatrix& a, const RMatrix& b,
                                       std::optional<Rational> pinned_lambda = std::nullopt,
                                       std::optional<Rational> pinned_mu = std::nullopt,
                                       ReduceAnchor anchor = ReduceAnchor::B);

/// Diagonal-scaling reduction: A1 = A + lambda J, D = diag(e^t B1),
/// A' = A1 D^{-1}. Canonical lambda additionally avoids zero columns in the
/// anchored shifted matrix (bump by 1), keeping D invertible.
ReductionResult reduce_diag_scale(const RMatrix& a, const RMatrix& b,
                                  std::optional<Rational> pinned_lambda = std::nullopt,
                                  ReduceAnchor anchor = ReduceAnchor::B);

/// Column normalization operator: each nonzero column divided by its sum,
/// zero columns replaced by e/n. For nonnegative input the result is column
/// stochastic; the formula is applied literally to any input, so columns
/// with negative sums are still divided by their sums. A nonzero column
/// whose sum is zero has no value under the definition and raises
/// precondition_error.
RMatrix theta(const RMatrix& x);

/// Five conditions that coincide on pairs of (0,1) matrices with equal
/// column sums, each evaluated independently so the coincidence is
/// observable rather than assumed. The
/// directional conditions are decided over the finite direction set
/// {-1,0,1}^m together with its image under the column-sum scaling
/// (exhaustively validated against the row-permutation characterization at
/// small sizes; plain (0,1) directions are not enough).
struct ZeroOneBridge {
    bool directional;
    bool strong;
    bool permutation;       // exists P with A = PB
    bool theta_directional;
    bool theta_strong;
};

ZeroOneBridge zero_one_bridge(const RMatrix& a, const RMatrix& b);

} // namespace majorkit

#endif

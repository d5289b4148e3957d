#ifndef MAJORKIT_VECTOR_MAJOR_HPP
#define MAJORKIT_VECTOR_MAJOR_HPP

#include <optional>

#include "majorkit/matrix.hpp"

namespace majorkit {

/// Doubly stochastic mix of two coordinates: t I + (1-t) P_(ij), 0 <= t <= 1.
struct TTransform {
    int i;
    int j;
    Rational t;

    RMatrix to_matrix(int n) const;
};

/// Decides a <= b in the majorization order: all n-1 prefix-sum inequalities
/// on the non-increasing rearrangements, with equal totals. Exact.
bool check_vector_majorization(const RVector& a, const RVector& b);

/// Witness construction detail: D = sort_a^t * (T_s ... T_1) * sort_b, where the
/// T-transform chain acts on sorted copies and has length <= n-1.
struct HlpWitness {
    RMatrix d;
    std::vector<TTransform> chain;
    Permutation sort_a;
    Permutation sort_b;
};

/// Constructive Hardy-Littlewood-Polya witness: a doubly stochastic D with
/// D b = a, for a majorized by b. The schedule is deterministic: on the sorted
/// copies, repeatedly take the smallest surplus index j (current_j > a_j) and
/// the smallest deficit index k > j (current_k < a_k), and transfer
/// min(surplus, deficit) between them; each step settles at least one
/// coordinate.
HlpWitness hlp_witness_detailed(const RVector& a, const RVector& b);
RMatrix hlp_witness(const RVector& a, const RVector& b);

/// Permutation P with a = P b when the entry multisets coincide, else nullopt
/// (a ~ b is equality up to permutation).
std::optional<Permutation> check_vector_equiv(const RVector& a, const RVector& b);

/// Result of the reduction of a majorization instance to probability
/// distributions: a' = (a + lambda e) / scale, likewise b', with
/// scale = e^t a + n lambda.
struct VectorReduction {
    RVector a_prime;
    RVector b_prime;
    Rational lambda;
    Rational scale;
};

/// Reduces (a, b) with e^t a = e^t b to a pair of probability distributions
/// with the same majorization verdict. Canonical shift: lambda = max(0, -min
/// entry over a and b), bumped by 1 only when a shifted vector would be
/// identically zero. Throws precondition_error when the totals differ (then
/// a is not majorized by b to begin with).
VectorReduction reduce_vector_to_distributions(const RVector& a, const RVector& b);

} // namespace majorkit

#endif

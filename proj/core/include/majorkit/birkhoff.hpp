#ifndef MAJORKIT_BIRKHOFF_HPP
#define MAJORKIT_BIRKHOFF_HPP

#include <cstdint>
#include <vector>

#include "majorkit/matrix.hpp"
#include "majorkit/rng.hpp"

namespace majorkit {

/// Convex combination of permutation matrices: weights are positive, sum to
/// 1, and sum(weight_i * P_i) reproduces the decomposed matrix exactly. Term
/// count is at most (n-1)^2 + 1.
struct BirkhoffDecomposition {
    struct Term {
        Rational weight;
        Permutation p;
    };
    std::vector<Term> terms;

    RMatrix reconstruct(int n) const;
};

/// Birkhoff-von Neumann decomposition of a doubly stochastic matrix: each
/// round finds a perfect matching on the support graph (depth-first
/// augmenting paths; one exists by Hall's theorem for doubly stochastic
/// support) and subtracts the minimum entry along it times the matching.
/// Exact; throws precondition_error when the input is not doubly stochastic.
BirkhoffDecomposition birkhoff_decompose(const RMatrix& d);

// --- exact random generators ----------------------------------------------

Permutation random_permutation(int n, Rng& rng);

/// Convex combination of k random permutation matrices with random positive
/// rational weights; k = 1 yields a permutation matrix.
RMatrix random_doubly_stochastic(int n, int k, std::uint64_t seed);

RMatrix random_column_stochastic(int n, int m, std::uint64_t seed);

/// Random vector with e^t v = 0 exactly (random rationals minus their mean).
RVector random_zero_sum(int n, std::uint64_t seed);

/// Random probability distribution (nonnegative, sums to 1 exactly).
RVector random_distribution(int n, std::uint64_t seed);

// In-stream variants used by composite generators.
RMatrix random_doubly_stochastic(int n, int k, Rng& rng);
RMatrix random_column_stochastic(int n, int m, Rng& rng);
RVector random_zero_sum(int n, Rng& rng);
RVector random_distribution(int n, Rng& rng);
/// Uniform small rational, numerator in [-6, 6], denominator in [1, 4].
Rational random_small_rational(Rng& rng);
RMatrix random_matrix(int n, int m, Rng& rng);
RVector random_vector(int n, Rng& rng);

} // namespace majorkit

#endif

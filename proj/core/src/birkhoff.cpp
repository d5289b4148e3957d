#include "majorkit/birkhoff.hpp"

#include <algorithm>

namespace majorkit {

RMatrix BirkhoffDecomposition::reconstruct(int n) const {
    RMatrix acc(n, n);
    for (const Term& t : terms) acc = acc + t.p.to_matrix() * t.weight;
    return acc;
}

namespace {

// Depth-first augmenting path on the support graph (rows to columns with a
// nonzero remaining entry).
bool augment(const RMatrix& rem, int row, std::vector<int>& match_col, std::vector<bool>& visited) {
    const int n = rem.rows();
    for (int c = 0; c < n; ++c) {
        if (visited[static_cast<size_t>(c)] || rem.at(row, c) == 0) continue;
        visited[static_cast<size_t>(c)] = true;
        if (match_col[static_cast<size_t>(c)] < 0 ||
            augment(rem, match_col[static_cast<size_t>(c)], match_col, visited)) {
            match_col[static_cast<size_t>(c)] = row;
            return true;
        }
    }
    return false;
}

} // namespace

BirkhoffDecomposition birkhoff_decompose(const RMatrix& d) {
    if (!is_doubly_stochastic(d))
        throw precondition_error("birkhoff_decompose: input is not doubly stochastic");
    const int n = d.rows();

    BirkhoffDecomposition out;
    RMatrix rem = d;
    Rational weight_left = 1;
    while (weight_left > 0) {
        std::vector<int> match_col(static_cast<size_t>(n), -1);
        for (int r = 0; r < n; ++r) {
            std::vector<bool> visited(static_cast<size_t>(n), false);
            if (!augment(rem, r, match_col, visited))
                throw std::logic_error("birkhoff_decompose: support graph lost its perfect matching");
        }
        std::vector<int> map(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) map[static_cast<size_t>(match_col[static_cast<size_t>(c)])] = c;
        Permutation p(std::move(map));

        Rational w = weight_left;
        for (int r = 0; r < n; ++r) w = std::min(w, rem.at(r, p.map()[static_cast<size_t>(r)]));
        for (int r = 0; r < n; ++r) rem.at(r, p.map()[static_cast<size_t>(r)]) -= w;
        weight_left -= w;
        out.terms.push_back({w, std::move(p)});
    }
    return out;
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> map(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) map[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(map[static_cast<size_t>(i)], map[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return Permutation(std::move(map));
}

Rational random_small_rational(Rng& rng) {
    return rat(rng.between(-6, 6), rng.between(1, 4));
}

RMatrix random_matrix(int n, int m, Rng& rng) {
    RMatrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = random_small_rational(rng);
    return a;
}

RVector random_vector(int n, Rng& rng) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v[i] = random_small_rational(rng);
    return v;
}

RMatrix random_doubly_stochastic(int n, int k, Rng& rng) {
    if (n < 1 || k < 1) throw precondition_error("random_doubly_stochastic: n >= 1 and k >= 1 required");
    RVector weights(k);
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
        weights[i] = rat(rng.between(1, 12), rng.between(1, 4));
        total += weights[i];
    }
    RMatrix acc(n, n);
    for (int i = 0; i < k; ++i)
        acc = acc + random_permutation(n, rng).to_matrix() * (weights[i] / total);
    return acc;
}

RMatrix random_column_stochastic(int n, int m, Rng& rng) {
    std::vector<RVector> cols;
    cols.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) cols.push_back(random_distribution(n, rng));
    return RMatrix::from_columns(cols);
}

RVector random_zero_sum(int n, Rng& rng) {
    RVector v = random_vector(n, rng);
    const Rational mean = v.sum() / n;
    for (int i = 0; i < n; ++i) v[i] -= mean;
    return v;
}

RVector random_distribution(int n, Rng& rng) {
    RVector v(n);
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
        v[i] = rat(rng.between(0, 8), rng.between(1, 4));
        total += v[i];
    }
    if (total == 0) {
        v[rng.below(static_cast<std::uint64_t>(n))] = 1;
        total = 1;
    }
    return v / total;
}

RMatrix random_doubly_stochastic(int n, int k, std::uint64_t seed) {
    Rng rng(seed);
    return random_doubly_stochastic(n, k, rng);
}

RMatrix random_column_stochastic(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    return random_column_stochastic(n, m, rng);
}

RVector random_zero_sum(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_zero_sum(n, rng);
}

RVector random_distribution(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_distribution(n, rng);
}

} // namespace majorkit

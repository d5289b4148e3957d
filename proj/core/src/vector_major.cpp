#include "majorkit/vector_major.hpp"

#include <algorithm>

namespace majorkit {

RMatrix TTransform::to_matrix(int n) const {
    RMatrix m = RMatrix::identity(n) * t;
    const Rational u = Rational(1) - t;
    RMatrix p = Permutation::transposition(n, i, j).to_matrix();
    return m + p * u;
}

bool check_vector_majorization(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw dimension_error("majorization check: lengths " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + " differ");
    const RVector ad = sort_desc(a).first;
    const RVector bd = sort_desc(b).first;
    Rational pa = 0, pb = 0;
    for (int k = 0; k < a.size() - 1; ++k) {
        pa += ad[k];
        pb += bd[k];
        if (pa > pb) return false;
    }
    return pa + ad[a.size() - 1] == pb + bd[b.size() - 1];
}

HlpWitness hlp_witness_detailed(const RVector& a, const RVector& b) {
    if (!check_vector_majorization(a, b))
        throw precondition_error("hlp_witness: a is not majorized by b");
    const int n = a.size();
    auto [target, sort_a] = sort_desc(a);
    auto [current, sort_b] = sort_desc(b);

    std::vector<TTransform> chain;
    RMatrix product = RMatrix::identity(n);
    while (!(current == target)) {
        int j = -1;
        for (int i = 0; i < n; ++i)
            if (current[i] > target[i]) { j = i; break; }
        int k = -1;
        for (int i = j + 1; i < n; ++i)
            if (current[i] < target[i]) { k = i; break; }
        // Equal totals and positional prefix dominance guarantee j, then k.
        if (j < 0 || k < 0) throw std::logic_error("hlp_witness: no transfer pair found");
        const Rational delta = std::min(current[j] - target[j], target[k] - current[k]);
        const Rational t = Rational(1) - delta / (current[j] - current[k]);
        TTransform tr{j, k, t};
        chain.push_back(tr);
        RMatrix tm = tr.to_matrix(n);
        current = tm * current;
        product = tm * product;
    }

    RMatrix d = sort_a.inverse().to_matrix() * product * sort_b.to_matrix();
    return HlpWitness{std::move(d), std::move(chain), std::move(sort_a), std::move(sort_b)};
}

RMatrix hlp_witness(const RVector& a, const RVector& b) { return hlp_witness_detailed(a, b).d; }

std::optional<Permutation> check_vector_equiv(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw dimension_error("vector equivalence: lengths differ");
    auto [ad, sort_a] = sort_desc(a);
    auto [bd, sort_b] = sort_desc(b);
    if (!(ad == bd)) return std::nullopt;
    // a = P b with P = sort_a^{-1} o sort_b (sorted forms coincide).
    return sort_a.inverse().compose(sort_b);
}

VectorReduction reduce_vector_to_distributions(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw dimension_error("vector reduction: lengths differ");
    if (a.sum() != b.sum())
        throw precondition_error("vector reduction: totals differ, so a is not majorized by b");
    const int n = a.size();

    Rational min_entry = a[0];
    for (int i = 0; i < n; ++i) min_entry = std::min(min_entry, a[i]);
    for (int i = 0; i < n; ++i) min_entry = std::min(min_entry, b[i]);
    Rational lambda = min_entry < 0 ? -min_entry : Rational(0);

    auto shifted_is_zero = [&](const RVector& v) {
        for (int i = 0; i < n; ++i)
            if (v[i] + lambda != 0) return false;
        return true;
    };
    if (shifted_is_zero(a) || shifted_is_zero(b)) lambda += 1;

    const Rational scale = a.sum() + lambda * n;
    RVector ones(n);
    for (int i = 0; i < n; ++i) ones[i] = 1;
    RVector ap = (a + ones * lambda) / scale;
    RVector bp = (b + ones * lambda) / scale;
    return VectorReduction{std::move(ap), std::move(bp), lambda, scale};
}

} // namespace majorkit

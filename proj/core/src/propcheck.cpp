#include "majorkit/propcheck.hpp"

#include <sstream>

#include "majorkit/birkhoff.hpp"
#include "majorkit/reductions.hpp"
#include "majorkit/vector_major.hpp"

namespace majorkit {

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::All: return "all";
        case Domain::Distributions: return "distributions";
        case Domain::ZeroSum: return "zero-sum";
        case Domain::ColumnStochastic: return "column-stochastic";
        case Domain::ZeroOne: return "zero-one";
    }
    return "?";
}

namespace {

RVector unit(int n, int g) {
    RVector e(n);
    e[g] = 1;
    return e;
}

RVector ones_vector(int n) {
    RVector e(n);
    for (int i = 0; i < n; ++i) e[i] = 1;
    return e;
}

RVector random_zero_one_vector(int n, Rng& rng) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.below(2) ? 1 : 0;
    return v;
}

RMatrix random_zero_one_matrix(int n, int m, Rng& rng) {
    RMatrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = rng.below(2) ? 1 : 0;
    return a;
}

RMatrix random_row_stochastic(int n, Rng& rng) {
    RMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.set_row(i, random_distribution(n, rng));
    return r;
}

[[noreturn]] void unsupported(const RelationSpec& spec) {
    throw precondition_error("unsupported (relation, domain) combination: " +
                             relation_name(spec.relation) + " on " + domain_name(spec.domain));
}

} // namespace

VectorPair gen_vector_pair(const RelationSpec& spec, int n, Rng& rng) {
    if (spec.relation != Relation::Vector) unsupported(spec);
    if (spec.domain == Domain::ZeroOne) {
        RVector b = random_zero_one_vector(n, rng);
        RVector a = random_permutation(n, rng).apply(b);
        if (!check_vector_majorization(a, b))
            throw std::logic_error("generated (0,1) pair fails its own relation");
        return {std::move(a), std::move(b)};
    }
    RVector b(n);
    switch (spec.domain) {
        case Domain::All: b = random_vector(n, rng); break;
        case Domain::Distributions: b = random_distribution(n, rng); break;
        case Domain::ZeroSum: b = random_zero_sum(n, rng); break;
        default: unsupported(spec);
    }
    const RMatrix d = random_doubly_stochastic(n, 1 + static_cast<int>(rng.below(3)), rng);
    RVector a = d * b;
    if (!check_vector_majorization(a, b))
        throw std::logic_error("generated vector pair fails its own relation");
    return {std::move(a), std::move(b)};
}

MatrixPair gen_matrix_pair(const RelationSpec& spec, int n, int m, Rng& rng) {
    switch (spec.relation) {
        case Relation::Strong: {
            if (spec.domain == Domain::ZeroOne) {
                RMatrix b = random_zero_one_matrix(n, m, rng);
                const Permutation p = random_permutation(n, rng);
                RMatrix a = p.apply_rows(b);
                return {std::move(a), std::move(b)};
            }
            RMatrix b(n, m);
            if (spec.domain == Domain::All) b = random_matrix(n, m, rng);
            else if (spec.domain == Domain::ColumnStochastic) b = random_column_stochastic(n, m, rng);
            else unsupported(spec);
            const RMatrix d = random_doubly_stochastic(n, 1 + static_cast<int>(rng.below(3)), rng);
            RMatrix a = d * b;
            if (!is_doubly_stochastic(d) || !(d * b == a))
                throw std::logic_error("generated strong pair fails substitution");
            return {std::move(a), std::move(b)};
        }
        case Relation::Weak: {
            if (spec.domain != Domain::All) unsupported(spec);
            RMatrix b = random_matrix(n, m, rng);
            const RMatrix r = random_row_stochastic(n, rng);
            RMatrix a = r * b;
            if (!is_row_stochastic(r)) throw std::logic_error("generated weak pair fails substitution");
            return {std::move(a), std::move(b)};
        }
        case Relation::Vector: {
            VectorPair p = gen_vector_pair(spec, n, rng);
            return {RMatrix::from_columns({p.a}), RMatrix::from_columns({p.b})};
        }
        default: unsupported(spec);
    }
}

MatrixPair gen_pair(const RelationSpec& spec, int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    return gen_matrix_pair(spec, n, m, rng);
}

namespace {

// --- fuzzing ---------------------------------------------------------------

struct ImageCheck {
    bool ok;
    std::string detail;
};

ImageCheck check_images(const RelationSpec& spec, const RMatrix& ia, const RMatrix& ib) {
    switch (spec.relation) {
        case Relation::Vector: {
            const bool ok = check_vector_majorization(ia.column(0), ib.column(0));
            return {ok, ok ? "" : "image vectors fail the prefix-sum majorization check"};
        }
        case Relation::Strong: {
            const MajorizationVerdict v = check_strong(ia, ib);
            return {v.holds(), v.holds() ? "" : "image matrices fail strong majorization: " + v.reason};
        }
        case Relation::Weak: {
            const MajorizationVerdict v = check_weak(ia, ib);
            return {v.holds(), v.holds() ? "" : "image matrices fail weak majorization: " + v.reason};
        }
        default: return {false, "unsupported relation"};
    }
}

bool pair_satisfies(const RelationSpec& spec, const RMatrix& a, const RMatrix& b) {
    switch (spec.relation) {
        case Relation::Vector: return check_vector_majorization(a.column(0), b.column(0));
        case Relation::Strong: return check_strong(a, b).holds();
        case Relation::Weak: return check_weak(a, b).holds();
        default: return false;
    }
}

std::vector<MatrixPair> vector_battery(Domain domain, int n) {
    std::vector<MatrixPair> battery;
    auto push = [&](const RVector& a, const RVector& b) {
        battery.push_back({RMatrix::from_columns({a}), RMatrix::from_columns({b})});
    };

    const bool dist = domain == Domain::All || domain == Domain::Distributions || domain == Domain::ZeroOne;
    const bool zsum = domain == Domain::All || domain == Domain::ZeroSum;

    if (dist) {
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (g != h) push(unit(n, g), unit(n, h));
        if (domain != Domain::ZeroOne)
            for (int g = 0; g < n; ++g) push(ones_vector(n) / Rational(n), unit(n, g));
    }
    if (zsum) {
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                if (g == h) continue;
                const RVector a = unit(n, g) - unit(n, h);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const Permutation q = Permutation::transposition(n, i, j);
                        push(a, q.apply(a));
                        push(q.apply(a), a);
                    }
            }
    }
    if (domain == Domain::ZeroOne) {
        for (int k = 1; k < n; ++k) {
            RVector x(n);
            for (int i = 0; i < k; ++i) x[i] = 1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const Permutation q = Permutation::transposition(n, i, j);
                    push(x, q.apply(x));
                    push(q.apply(x), x);
                }
        }
    }
    return battery;
}

std::vector<MatrixPair> matrix_battery(Domain domain, int n, int m) {
    std::vector<MatrixPair> battery;
    auto push_permuted = [&](const RMatrix& x) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Permutation q = Permutation::transposition(n, i, j);
                battery.push_back({x, q.apply_rows(x)});
                battery.push_back({q.apply_rows(x), x});
            }
    };

    if (domain == Domain::All || domain == Domain::ZeroOne) {
        for (int q = 0; q < n; ++q)
            for (int j = 0; j < m; ++j) {
                RMatrix basis(n, m);
                basis.at(q, j) = 1;
                push_permuted(basis);
            }
    }
    if (domain == Domain::All || domain == Domain::ColumnStochastic) {
        // (1/n)((e_g - e_h) e_k^t + J) and its two-column variants: the
        // column stochastic matrices violations concentrate on.
        const Rational inv_n = Rational(1) / n;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                if (g == h) continue;
                const RVector diff = unit(n, g) - unit(n, h);
                for (int k = 0; k < m; ++k) {
                    RMatrix x = RMatrix::ones(n, m);
                    x.set_column(k, x.column(k) + diff);
                    push_permuted(x * inv_n);
                }
                for (int k1 = 0; k1 < m; ++k1)
                    for (int k2 = k1 + 1; k2 < m; ++k2) {
                        RMatrix x = RMatrix::ones(n, m);
                        x.set_column(k1, x.column(k1) + diff);
                        x.set_column(k2, x.column(k2) + diff);
                        push_permuted(x * inv_n);
                    }
            }
    }
    return battery;
}

template <typename Op>
std::optional<Counterexample> fuzz_impl(const Op& apply, const RelationSpec& spec, int n, int m,
                                        const std::vector<MatrixPair>& battery, long trials,
                                        std::uint64_t seed) {
    long index = 0;
    auto try_pair = [&](const MatrixPair& pair, bool from_battery) -> std::optional<Counterexample> {
        RMatrix ia = apply(pair.a);
        RMatrix ib = apply(pair.b);
        ImageCheck res = check_images(spec, ia, ib);
        ++index;
        if (res.ok) return std::nullopt;
        std::ostringstream transcript;
        transcript << "relation " << relation_name(spec.relation) << " on domain "
                   << domain_name(spec.domain) << ", " << (from_battery ? "battery" : "random")
                   << " trial " << index << ": original pair satisfies the relation; " << res.detail;
        return Counterexample{pair.a, pair.b, std::move(ia), std::move(ib), transcript.str(),
                              from_battery, index};
    };

    for (const MatrixPair& pair : battery)
        if (auto ce = try_pair(pair, true)) return ce;

    Rng rng = Rng(seed).split(0x66757a7a);
    for (long t = 0; t < trials; ++t) {
        MatrixPair pair = gen_matrix_pair(spec, n, m, rng);
        if (auto ce = try_pair(pair, false)) return ce;
    }
    return std::nullopt;
}

} // namespace

std::optional<Counterexample> fuzz_preserver(const VectorOperator& op, const RelationSpec& spec,
                                             long trials, std::uint64_t seed) {
    if (spec.relation != Relation::Vector)
        throw precondition_error("a vector operator can only be fuzzed against the vector relation");
    const int n = op.n();
    auto apply = [&](const RMatrix& x) { return RMatrix::from_columns({op.apply(x.column(0))}); };
    return fuzz_impl(apply, spec, n, 1, vector_battery(spec.domain, n), trials, seed);
}

std::optional<Counterexample> fuzz_preserver(const OperatorGrid& op, const RelationSpec& spec,
                                             long trials, std::uint64_t seed) {
    if (spec.relation == Relation::Vector)
        throw precondition_error("an operator grid cannot be fuzzed against the vector relation");
    auto apply = [&](const RMatrix& x) { return op.apply(x); };
    return fuzz_impl(apply, spec, op.n(), op.m(), matrix_battery(spec.domain, op.n(), op.m()),
                     trials, seed);
}

bool verify_counterexample(const VectorOperator& op, const RelationSpec& spec,
                           const Counterexample& ce) {
    if (!pair_satisfies(spec, ce.a, ce.b)) return false;
    RMatrix ia = RMatrix::from_columns({op.apply(ce.a.column(0))});
    RMatrix ib = RMatrix::from_columns({op.apply(ce.b.column(0))});
    if (!(ia == ce.image_a) || !(ib == ce.image_b)) return false;
    return !check_images(spec, ia, ib).ok;
}

bool verify_counterexample(const OperatorGrid& op, const RelationSpec& spec,
                           const Counterexample& ce) {
    if (!pair_satisfies(spec, ce.a, ce.b)) return false;
    RMatrix ia = op.apply(ce.a);
    RMatrix ib = op.apply(ce.b);
    if (!(ia == ce.image_a) || !(ib == ce.image_b)) return false;
    return !check_images(spec, ia, ib).ok;
}

// --- property suite ----------------------------------------------------------

bool SuiteReport::all_pass() const {
    for (const PropertyOutcome& p : properties)
        if (!p.passed()) return false;
    return true;
}

SuiteReport run_properties(const std::vector<Property>& props, std::uint64_t seed,
                           const SuiteSizes& sizes) {
    SuiteReport report;
    Rng master(seed);
    for (size_t pi = 0; pi < props.size(); ++pi) {
        PropertyOutcome outcome;
        outcome.name = props[pi].name;
        Rng prop_rng = master.split(pi + 1);
        for (long c = 0; c < sizes.cases; ++c) {
            const std::uint64_t case_seed = prop_rng.next();
            Rng case_rng(case_seed);
            bool ok = false;
            try {
                ok = props[pi].run_case(case_rng, sizes);
            } catch (const std::exception&) {
                ok = false;
            }
            ++outcome.cases;
            if (!ok) {
                ++outcome.failures;
                if (!outcome.first_failure_seed) outcome.first_failure_seed = case_seed;
            }
        }
        report.properties.push_back(std::move(outcome));
    }
    return report;
}

namespace {

// Shared drawing helpers for the registered properties.

struct DrawnPair {
    RMatrix a;
    RMatrix b;
};

DrawnPair draw_matrix_pair(Rng& rng, const SuiteSizes& sizes) {
    const int n = static_cast<int>(rng.between(2, sizes.max_n));
    const int m = static_cast<int>(rng.between(1, sizes.max_m));
    if (rng.below(2)) {
        MatrixPair p = gen_matrix_pair({Relation::Strong, Domain::All}, n, m, rng);
        return {std::move(p.a), std::move(p.b)};
    }
    return {random_matrix(n, m, rng), random_matrix(n, m, rng)};
}

// L U product with unit lower and nonzero upper diagonal: invertible by
// construction.
RMatrix random_invertible(int m, Rng& rng) {
    RMatrix l = RMatrix::identity(m);
    RMatrix u(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) l.at(i, j) = random_small_rational(rng);
        u.at(i, i) = rat(rng.between(0, 1) ? 1 : -1, rng.between(1, 3));
        for (int j = i + 1; j < m; ++j) u.at(i, j) = random_small_rational(rng);
    }
    return l * u;
}

OperatorGrid draw_cs_preserver(int n, int m, Rng& rng) {
    std::vector<RMatrix> s;
    s.reserve(static_cast<size_t>(m));
    const Permutation p = random_permutation(n, rng);
    if (rng.below(2)) {
        // R = 0: free S_j.
        for (int j = 0; j < m; ++j) s.push_back(random_matrix(n, m, rng));
        return make_cs_form(s, p, RMatrix::zero(m, m));
    }
    // R != 0 with sum S_j = e v^t.
    RMatrix r = random_matrix(m, m, rng);
    if (r.is_zero()) r.at(0, 0) = 1;
    RMatrix sum = RMatrix::zero(n, m);
    for (int j = 0; j + 1 < m; ++j) {
        s.push_back(random_matrix(n, m, rng));
        sum = sum + s.back();
    }
    const RVector v = random_vector(m, rng);
    s.push_back(RMatrix::outer(ones_vector(n), v) - sum);
    return make_cs_form(s, p, r);
}

} // namespace

std::vector<Property> standard_property_registry() {
    std::vector<Property> props;

    props.push_back({"strong/weak verdicts invariant under right multiplication by invertible Y",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         const RMatrix y = random_invertible(p.a.cols(), rng);
                         const RMatrix ay = p.a * y, by = p.b * y;
                         if (check_strong(p.a, p.b).holds() != check_strong(ay, by).holds()) return false;
                         return check_weak(p.a, p.b).holds() == check_weak(ay, by).holds();
                     }});

    props.push_back({"strong verdict invariant under adding e v^t",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         const RVector v = random_vector(p.a.cols(), rng);
                         const RMatrix evt = RMatrix::outer(ones_vector(p.a.rows()), v);
                         return check_strong(p.a, p.b).holds() ==
                                check_strong(p.a + evt, p.b + evt).holds();
                     }});

    props.push_back({"strong verdict invariant under nonzero scaling",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         Rational lambda = random_small_rational(rng);
                         if (lambda == 0) lambda = rat(-3, 2);
                         return check_strong(p.a, p.b).holds() ==
                                check_strong(p.a * lambda, p.b * lambda).holds();
                     }});

    props.push_back({"strong verdict invariant under right multiplication by nonsingular diagonal",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         RVector d(p.a.cols());
                         for (int j = 0; j < d.size(); ++j) {
                             d[j] = random_small_rational(rng);
                             if (d[j] == 0) d[j] = 1;
                         }
                         const RMatrix dm = RMatrix::diagonal(d);
                         return check_strong(p.a, p.b).holds() ==
                                check_strong(p.a * dm, p.b * dm).holds();
                     }});

    props.push_back({"strong verdict invariant under adding lambda J",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         const Rational lambda = random_small_rational(rng);
                         const RMatrix shift = RMatrix::ones(p.a.rows(), p.a.cols()) * lambda;
                         return check_strong(p.a, p.b).holds() ==
                                check_strong(p.a + shift, p.b + shift).holds();
                     }});

    props.push_back({"directional status invariant under adding e v^t",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         const RVector v = random_vector(p.a.cols(), rng);
                         const RMatrix evt = RMatrix::outer(ones_vector(p.a.rows()), v);
                         const std::uint64_t s = rng.next();
                         const auto v1 = check_directional(p.a, p.b, 12, s);
                         const auto v2 = check_directional(p.a + evt, p.b + evt, 12, s);
                         return v1.status == v2.status;
                     }});

    props.push_back({"directional status invariant under adding lambda J",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         DrawnPair p = draw_matrix_pair(rng, sizes);
                         const Rational lambda = random_small_rational(rng);
                         const RMatrix shift = RMatrix::ones(p.a.rows(), p.a.cols()) * lambda;
                         const std::uint64_t s = rng.next();
                         const auto v1 = check_directional(p.a, p.b, 12, s);
                         const auto v2 = check_directional(p.a + shift, p.b + shift, 12, s);
                         return v1.status == v2.status;
                     }});

    props.push_back({"mutual vector majorization is equality up to permutation",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const RVector a = random_vector(n, rng);
                         const RVector pa = random_permutation(n, rng).apply(a);
                         if (!check_vector_majorization(a, pa) || !check_vector_majorization(pa, a))
                             return false;
                         if (!check_vector_equiv(a, pa)) return false;
                         const RVector b = random_vector(n, rng);
                         const bool mutual =
                             check_vector_majorization(a, b) && check_vector_majorization(b, a);
                         return mutual == check_vector_equiv(a, b).has_value();
                     }});

    props.push_back({"mutual strong majorization is a row permutation",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const int m = static_cast<int>(rng.between(1, sizes.max_m));
                         const RMatrix b = random_matrix(n, m, rng);
                         const RMatrix a = random_permutation(n, rng).apply_rows(b);
                         if (!check_strong(a, b).holds() || !check_strong(b, a).holds()) return false;
                         auto p = check_strong_equiv(a, b);
                         if (!p) return false;
                         return p->apply_rows(b) == a;
                     }});

    props.push_back({"(0,1)-vector majorization is equality of sums",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const RVector a = random_zero_one_vector(n, rng);
                         const RVector b = random_zero_one_vector(n, rng);
                         return check_vector_majorization(a, b) == (a.sum() == b.sum());
                     }});

    props.push_back({"zero-sum preserver form has equal column sums",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const VectorOperator x = make_zero_sum(random_vector(n, rng),
                                                                random_small_rational(rng),
                                                                random_permutation(n, rng));
                         const RVector sums = x.mat.column_sums();
                         for (int i = 1; i < n; ++i)
                             if (sums[i] != sums[0]) return false;
                         return true;
                     }});

    props.push_back({"zero-sum preserver form has permutation-equivalent column differences",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const VectorOperator x = make_zero_sum(random_vector(n, rng),
                                                                random_small_rational(rng),
                                                                random_permutation(n, rng));
                         const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                         int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                         if (j == i) j = (j + 1) % n;
                         const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                         int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                         if (l == k) l = (l + 1) % n;
                         const RVector d1 = x.mat.column(i) - x.mat.column(j);
                         const RVector d2 = x.mat.column(k) - x.mat.column(l);
                         return check_vector_equiv(d1, d2).has_value();
                     }});

    props.push_back({"zero-sum preserver form maps zero-sum vectors to zero-sum vectors",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const VectorOperator x = make_zero_sum(random_vector(n, rng),
                                                                random_small_rational(rng),
                                                                random_permutation(n, rng));
                         return is_zero_sum(x.apply(random_zero_sum(n, rng)));
                     }});

    props.push_back({"classified zero-sum preservers satisfy Xa ~ XPa on zero-sum vectors",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const VectorOperator x = make_zero_sum(random_vector(n, rng),
                                                                random_small_rational(rng),
                                                                random_permutation(n, rng));
                         if (!classify_zero_sum_preserver(x)) return false;
                         const RVector a = random_zero_sum(n, rng);
                         const Permutation p = random_permutation(n, rng);
                         return check_vector_equiv(x.apply(a), x.apply(p.apply(a))).has_value();
                     }});

    props.push_back({"vector majorization preservers preserve (0,1)-vector majorization",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, sizes.max_n));
                         const VectorOperator op =
                             rng.below(2) ? make_ando1(random_vector(n, rng))
                                          : make_ando2(random_small_rational(rng),
                                                       random_small_rational(rng),
                                                       random_permutation(n, rng));
                         const RVector b = random_zero_one_vector(n, rng);
                         const RVector a = random_permutation(n, rng).apply(b);
                         return check_vector_majorization(op.apply(a), op.apply(b));
                     }});

    props.push_back({"column-stochastic preservers compose with theta into (0,1) strong preservers",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, std::min(sizes.max_n, 4)));
                         const int m = static_cast<int>(rng.between(1, std::min(sizes.max_m, 3)));
                         const OperatorGrid g = draw_cs_preserver(n, m, rng);
                         const RMatrix b = random_zero_one_matrix(n, m, rng);
                         const RMatrix a = random_permutation(n, rng).apply_rows(b);
                         return check_strong(g.apply(theta(a)), g.apply(theta(b))).holds();
                     }});

    props.push_back({"block-column sums of a column-stochastic preserver preserve vector majorization",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, std::min(sizes.max_n, 4)));
                         const int m = static_cast<int>(rng.between(1, std::min(sizes.max_m, 3)));
                         const OperatorGrid g = draw_cs_preserver(n, m, rng);
                         if (!is_cs_preserver(g)) return false;
                         for (int k = 0; k < m; ++k) {
                             RMatrix sum = RMatrix::zero(n, n);
                             for (int j = 0; j < m; ++j) sum = sum + g.block(k, j);
                             if (!classify_vector_preserver(VectorOperator{sum})) return false;
                         }
                         return true;
                     }});

    props.push_back({"blocks of a column-stochastic preserver preserve zero-sum majorization",
                     [](Rng& rng, const SuiteSizes& sizes) {
                         const int n = static_cast<int>(rng.between(2, std::min(sizes.max_n, 4)));
                         const int m = static_cast<int>(rng.between(1, std::min(sizes.max_m, 3)));
                         const OperatorGrid g = draw_cs_preserver(n, m, rng);
                         for (int i = 0; i < m; ++i)
                             for (int j = 0; j < m; ++j)
                                 if (!classify_zero_sum_preserver(VectorOperator{g.block(i, j)}))
                                     return false;
                         // Sums over random block subsets keep the form as well.
                         const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
                         RMatrix sum = RMatrix::zero(n, n);
                         bool any = false;
                         for (int j = 0; j < m; ++j)
                             if (rng.below(2)) {
                                 sum = sum + g.block(k, j);
                                 any = true;
                             }
                         if (!any) sum = g.block(k, 0);
                         return classify_zero_sum_preserver(VectorOperator{sum}).has_value();
                     }});

    return props;
}

SuiteReport lemma_suite(std::uint64_t seed, const SuiteSizes& sizes) {
    return run_properties(standard_property_registry(), seed, sizes);
}

} // namespace majorkit

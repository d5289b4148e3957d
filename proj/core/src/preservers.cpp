#include "majorkit/preservers.hpp"

#include <algorithm>
#include <map>

namespace majorkit {

OperatorGrid::OperatorGrid(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw dimension_error("operator grid needs n >= 1 and m >= 1");
    blocks_.assign(static_cast<size_t>(m) * m, RMatrix::zero(n, n));
}

RMatrix OperatorGrid::apply(const RMatrix& x) const {
    if (x.rows() != n_ || x.cols() != m_)
        throw dimension_error("operator grid applied to a matrix of the wrong shape");
    RMatrix out(n_, m_);
    for (int i = 0; i < m_; ++i) {
        RVector acc(n_);
        for (int j = 0; j < m_; ++j) acc = acc + block(i, j) * x.column(j);
        out.set_column(i, acc);
    }
    return out;
}

OperatorGrid decompose_operator(const RMatrix& vectorized, int n, int m) {
    if (vectorized.rows() != n * m || vectorized.cols() != n * m)
        throw dimension_error("vectorized operator must be nm x nm");
    OperatorGrid g(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    g.block(i, j).at(r, c) = vectorized.at(i * n + r, j * n + c);
    return g;
}

OperatorGrid decompose_operator(const std::function<RMatrix(const RMatrix&)>& phi, int n, int m) {
    OperatorGrid g(n, m);
    for (int j = 0; j < m; ++j)
        for (int q = 0; q < n; ++q) {
            RMatrix basis(n, m);
            basis.at(q, j) = 1;
            const RMatrix image = phi(basis);
            if (image.rows() != n || image.cols() != m)
                throw dimension_error("operator callback returned a matrix of the wrong shape");
            for (int i = 0; i < m; ++i)
                g.block(i, j).set_column(q, image.column(i));
        }
    return g;
}

RMatrix compose_operator(const OperatorGrid& g) {
    const int n = g.n(), m = g.m();
    RMatrix v(n * m, n * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) v.at(i * n + r, j * n + c) = g.block(i, j).at(r, c);
    return v;
}

namespace {

RVector ones_vector(int n) {
    RVector e(n);
    for (int i = 0; i < n; ++i) e[i] = 1;
    return e;
}

bool all_columns_equal(const RMatrix& x) {
    for (int j = 1; j < x.cols(); ++j)
        if (!(x.column(j) == x.column(0))) return false;
    return true;
}

bool is_constant(const RVector& v) {
    for (int i = 1; i < v.size(); ++i)
        if (v[i] != v[0]) return false;
    return true;
}

RMatrix zero_sum_form_matrix(const ZeroSumForm& f) {
    const int n = f.v.size();
    return RMatrix::outer(f.v, ones_vector(n)) + f.p.to_matrix() * f.lambda;
}

// Representations of one block usable for a required shared permutation:
// the canonical one, plus the swapped one when n = 2. A representation with
// lambda = 0 fits any permutation.
std::vector<ZeroSumForm> representations(const ZeroSumForm& canonical) {
    std::vector<ZeroSumForm> reps{canonical};
    if (auto alt = zero_sum_alternate_form(canonical)) reps.push_back(*alt);
    return reps;
}

bool rep_fits(const ZeroSumForm& rep, const Permutation& p) {
    return rep.lambda == 0 || rep.p == p;
}

} // namespace

std::optional<ZeroSumForm> classify_zero_sum_preserver(const VectorOperator& x) {
    const int n = x.n();
    if (n == 1)
        return ZeroSumForm{x.mat.column(0), Rational(0), Permutation::identity(1)};
    if (n == 2) {
        if (x.mat.column(0).sum() != x.mat.column(1).sum()) return std::nullopt;
        RVector v{x.mat.at(0, 1), x.mat.at(1, 0)};
        return ZeroSumForm{std::move(v), x.mat.at(0, 0) - x.mat.at(0, 1), Permutation::identity(2)};
    }

    // n >= 3: each row is constant except for at most one deviant entry.
    RVector v(n);
    std::vector<int> deviant_col(static_cast<size_t>(n), -1);
    std::vector<Rational> deviation(static_cast<size_t>(n), Rational(0));
    bool any_deviant = false, all_deviant = true;
    for (int i = 0; i < n; ++i) {
        std::map<Rational, int> counts;
        for (int j = 0; j < n; ++j) ++counts[x.mat.at(i, j)];
        if (counts.size() == 1) {
            v[i] = x.mat.at(i, 0);
            all_deviant = false;
            continue;
        }
        if (counts.size() != 2) return std::nullopt;
        auto first = counts.begin(), second = std::next(first);
        const auto& [lo, lo_count] = *first;
        const auto& [hi, hi_count] = *second;
        Rational majority, deviant;
        if (lo_count == n - 1 && hi_count == 1) {
            majority = lo;
            deviant = hi;
        } else if (hi_count == n - 1 && lo_count == 1) {
            majority = hi;
            deviant = lo;
        } else {
            return std::nullopt;
        }
        v[i] = majority;
        for (int j = 0; j < n; ++j)
            if (x.mat.at(i, j) == deviant) deviant_col[static_cast<size_t>(i)] = j;
        deviation[static_cast<size_t>(i)] = deviant - majority;
        any_deviant = true;
    }

    if (!any_deviant) return ZeroSumForm{std::move(v), Rational(0), Permutation::identity(n)};
    if (!all_deviant) return std::nullopt;

    const Rational lambda = deviation[0];
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (deviation[static_cast<size_t>(i)] != lambda) return std::nullopt;
        const int j = deviant_col[static_cast<size_t>(i)];
        if (used[static_cast<size_t>(j)]) return std::nullopt;
        used[static_cast<size_t>(j)] = true;
    }
    ZeroSumForm form{std::move(v), lambda, Permutation(std::move(deviant_col))};
    if (!(zero_sum_form_matrix(form) == x.mat)) return std::nullopt;
    return form;
}

std::optional<ZeroSumForm> zero_sum_alternate_form(const ZeroSumForm& f) {
    if (f.v.size() != 2) return std::nullopt;
    // v e^t + lambda P = (v + lambda e) e^t - lambda P', P' the other permutation.
    RVector v2 = f.v + ones_vector(2) * f.lambda;
    Permutation other = f.p.is_identity() ? Permutation::transposition(2, 0, 1) : Permutation::identity(2);
    return ZeroSumForm{std::move(v2), -f.lambda, std::move(other)};
}

std::optional<Rational> check_condition_alpha(const VectorOperator& x) {
    const int n = x.n();
    if (n == 1) return std::nullopt;
    std::optional<Rational> alpha;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const RVector diff = x.mat.column(i) - x.mat.column(j);
            Rational pos = 0, neg = 0;
            int nonzero = 0;
            for (int q = 0; q < n; ++q) {
                if (diff[q] == 0) continue;
                ++nonzero;
                if (diff[q] > 0) pos = diff[q];
                else neg = diff[q];
            }
            if (nonzero != 2 || pos == 0 || pos != -neg) return std::nullopt;
            if (!alpha) alpha = pos;
            else if (*alpha != pos) return std::nullopt;
        }
    return alpha;
}

std::optional<AndoForm> classify_vector_preserver(const VectorOperator& x) {
    if (all_columns_equal(x.mat)) return AndoForm{Ando1{x.mat.column(0)}};
    auto zsf = classify_zero_sum_preserver(x);
    if (!zsf) return std::nullopt;
    for (const ZeroSumForm& rep : representations(*zsf))
        if (is_constant(rep.v)) return AndoForm{Ando2{rep.lambda, rep.v[0], rep.p}};
    return std::nullopt;
}

std::optional<AndoForm> classify_prob_preserver(const VectorOperator& x) {
    return classify_vector_preserver(x);
}

std::optional<StrongPreserverForm> classify_strong_preserver(const OperatorGrid& g) {
    const int n = g.n(), m = g.m();

    bool li_poon1 = true;
    for (int i = 0; i < m && li_poon1; ++i)
        for (int j = 0; j < m && li_poon1; ++j)
            if (!all_columns_equal(g.block(i, j))) li_poon1 = false;
    if (li_poon1) {
        std::vector<RMatrix> s(static_cast<size_t>(m), RMatrix::zero(n, m));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) s[static_cast<size_t>(j)].set_column(i, g.block(i, j).column(0));
        return StrongPreserverForm{LiPoon1{std::move(s)}};
    }

    // LiPoon2: block(i, j) = r_{ji} P + s_{ji} J, i.e. a ZeroSumForm with a
    // constant v, under a shared P.
    std::vector<std::vector<ZeroSumForm>> reps(static_cast<size_t>(m) * m);
    std::vector<Permutation> candidates{Permutation::identity(n)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto zsf = classify_zero_sum_preserver(VectorOperator{g.block(i, j)});
            if (!zsf) return std::nullopt;
            auto& cell = reps[static_cast<size_t>(i) * m + j];
            for (const ZeroSumForm& rep : representations(*zsf))
                if (is_constant(rep.v)) cell.push_back(rep);
            if (cell.empty()) return std::nullopt;
            for (const ZeroSumForm& rep : cell)
                if (rep.lambda != 0 &&
                    std::find(candidates.begin(), candidates.end(), rep.p) == candidates.end())
                    candidates.push_back(rep.p);
        }

    for (const Permutation& p : candidates) {
        RMatrix r(m, m), s(m, m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j) {
                const auto& cell = reps[static_cast<size_t>(i) * m + j];
                auto it = std::find_if(cell.begin(), cell.end(),
                                       [&](const ZeroSumForm& rep) { return rep_fits(rep, p); });
                if (it == cell.end()) {
                    ok = false;
                    break;
                }
                r.at(j, i) = it->lambda;
                s.at(j, i) = it->v[0];
            }
        if (!ok) continue;
        OperatorGrid rebuilt = make_li_poon2(p, r, s);
        if (rebuilt == g) return StrongPreserverForm{LiPoon2{std::move(r), std::move(s), p}};
    }
    return std::nullopt;
}

std::optional<CSForm> extract_cs_preserver_form(const OperatorGrid& g) {
    const int n = g.n(), m = g.m();

    std::vector<std::vector<ZeroSumForm>> reps(static_cast<size_t>(m) * m);
    std::vector<Permutation> candidates{Permutation::identity(n)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto zsf = classify_zero_sum_preserver(VectorOperator{g.block(i, j)});
            if (!zsf) return std::nullopt;
            auto& cell = reps[static_cast<size_t>(i) * m + j];
            cell = representations(*zsf);
            for (const ZeroSumForm& rep : cell)
                if (rep.lambda != 0 &&
                    std::find(candidates.begin(), candidates.end(), rep.p) == candidates.end())
                    candidates.push_back(rep.p);
        }

    for (const Permutation& p : candidates) {
        std::vector<RMatrix> s(static_cast<size_t>(m), RMatrix::zero(n, m));
        RMatrix r(m, m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j) {
                const auto& cell = reps[static_cast<size_t>(i) * m + j];
                auto it = std::find_if(cell.begin(), cell.end(),
                                       [&](const ZeroSumForm& rep) { return rep_fits(rep, p); });
                if (it == cell.end()) {
                    ok = false;
                    break;
                }
                s[static_cast<size_t>(j)].set_column(i, it->v);
                r.at(j, i) = it->lambda;
            }
        if (!ok) continue;

        RMatrix sum = RMatrix::zero(n, m);
        for (const RMatrix& sj : s) sum = sum + sj;
        bool constraint = r.is_zero();
        if (!constraint) {
            constraint = true;
            for (int j = 0; j < m && constraint; ++j)
                if (!is_constant(sum.column(j))) constraint = false;
        }

        OperatorGrid rebuilt = make_cs_form(s, p, r);
        if (rebuilt == g) return CSForm{std::move(s), p, std::move(r), constraint};
    }
    return std::nullopt;
}

bool is_cs_preserver(const OperatorGrid& g) {
    auto form = extract_cs_preserver_form(g);
    return form && form->constraint_ok;
}

VectorOperator make_ando1(const RVector& s) {
    return VectorOperator{RMatrix::outer(s, ones_vector(s.size()))};
}

VectorOperator make_ando2(const Rational& alpha, const Rational& beta, const Permutation& p) {
    const int n = p.size();
    return VectorOperator{p.to_matrix() * alpha + RMatrix::ones(n, n) * beta};
}

VectorOperator make_zero_sum(const RVector& v, const Rational& lambda, const Permutation& p) {
    if (v.size() != p.size()) throw dimension_error("make_zero_sum: v and P sizes differ");
    return VectorOperator{zero_sum_form_matrix(ZeroSumForm{v, lambda, p})};
}

OperatorGrid make_li_poon1(const std::vector<RMatrix>& s) {
    if (s.empty()) throw dimension_error("make_li_poon1: no S matrices");
    const int m = static_cast<int>(s.size());
    const int n = s.front().rows();
    for (const RMatrix& sj : s)
        if (sj.rows() != n || sj.cols() != m)
            throw dimension_error("make_li_poon1: every S_j must be n x m");
    OperatorGrid g(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g.block(i, j) = RMatrix::outer(s[static_cast<size_t>(j)].column(i), ones_vector(n));
    return g;
}

OperatorGrid make_li_poon2(const Permutation& p, const RMatrix& r, const RMatrix& s) {
    if (r.rows() != r.cols() || s.rows() != s.cols() || r.rows() != s.rows())
        throw dimension_error("make_li_poon2: R and S must be m x m");
    const int n = p.size();
    const int m = r.rows();
    const RMatrix pm = p.to_matrix();
    const RMatrix j_full = RMatrix::ones(n, n);
    OperatorGrid g(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.block(i, j) = pm * r.at(j, i) + j_full * s.at(j, i);
    return g;
}

OperatorGrid make_cs_form(const std::vector<RMatrix>& s, const Permutation& p, const RMatrix& r) {
    if (s.empty()) throw dimension_error("make_cs_form: no S matrices");
    const int m = static_cast<int>(s.size());
    const int n = s.front().rows();
    if (r.rows() != m || r.cols() != m) throw dimension_error("make_cs_form: R must be m x m");
    if (p.size() != n) throw dimension_error("make_cs_form: P must be n x n");
    for (const RMatrix& sj : s)
        if (sj.rows() != n || sj.cols() != m)
            throw dimension_error("make_cs_form: every S_j must be n x m");
    const RMatrix pm = p.to_matrix();
    OperatorGrid g(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g.block(i, j) =
                RMatrix::outer(s[static_cast<size_t>(j)].column(i), ones_vector(n)) + pm * r.at(j, i);
    return g;
}

} // namespace majorkit

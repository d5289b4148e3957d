#include "majorkit/lp.hpp"

#include <cassert>

namespace majorkit {

namespace {

// Full-tableau phase-1 simplex. Columns: N original variables, then k
// artificials, then the rhs. The cost row is pivoted along with the rest, so
// it always holds the reduced costs of min sum(artificials).
class Phase1 {
public:
    Phase1(const RMatrix& e, const RVector& f) : k_(e.rows()), n_(e.cols()) {
        tab_.assign(static_cast<size_t>(k_) + 1, std::vector<Rational>(width(), Rational(0)));
        sign_.assign(static_cast<size_t>(k_), 1);
        basis_.assign(static_cast<size_t>(k_), 0);
        for (int r = 0; r < k_; ++r) {
            const bool flip = f[r] < 0;
            if (flip) sign_[static_cast<size_t>(r)] = -1;
            for (int j = 0; j < n_; ++j)
                tab_[static_cast<size_t>(r)][static_cast<size_t>(j)] = flip ? -e.at(r, j) : e.at(r, j);
            tab_[static_cast<size_t>(r)][static_cast<size_t>(n_ + r)] = 1;
            tab_[static_cast<size_t>(r)][static_cast<size_t>(width() - 1)] = flip ? -f[r] : f[r];
            basis_[static_cast<size_t>(r)] = n_ + r;
        }
        // Cost row: reduced costs of c = (0,...,0, 1,...,1) with the
        // artificial basis, i.e. c_j - sum of column j over all rows.
        auto& cost = tab_.back();
        for (int j = 0; j < n_; ++j)
            for (int r = 0; r < k_; ++r) cost[static_cast<size_t>(j)] -= tab_[static_cast<size_t>(r)][static_cast<size_t>(j)];
        for (int r = 0; r < k_; ++r) cost[static_cast<size_t>(width() - 1)] -= tab_[static_cast<size_t>(r)][static_cast<size_t>(width() - 1)];
    }

    FeasibilityOutcome run() {
        while (true) {
            const int enter = entering();
            if (enter < 0) break;
            const int leave = leaving(enter);
            // The phase-1 objective is bounded below by 0, so a leaving row
            // always exists.
            if (leave < 0) throw std::logic_error("phase-1 simplex: unbounded improving direction");
            pivot(leave, enter);
        }
        if (objective() > 0) return FeasibilityOutcome::make_infeasible(certificate());
        drive_out_artificials();
        return FeasibilityOutcome::make_feasible(witness());
    }

private:
    int width() const { return n_ + k_ + 1; }

    Rational objective() const { return -tab_.back()[static_cast<size_t>(width() - 1)]; }

    // Bland: smallest-index column with negative reduced cost.
    int entering() const {
        const auto& cost = tab_.back();
        for (int j = 0; j < n_ + k_; ++j)
            if (cost[static_cast<size_t>(j)] < 0) return j;
        return -1;
    }

    // Minimum ratio; ties broken by smallest basis variable index (Bland).
    int leaving(int enter) const {
        int best = -1;
        Rational best_ratio = 0;
        for (int r = 0; r < k_; ++r) {
            const Rational& coeff = tab_[static_cast<size_t>(r)][static_cast<size_t>(enter)];
            if (coeff <= 0) continue;
            Rational ratio = tab_[static_cast<size_t>(r)][static_cast<size_t>(width() - 1)] / coeff;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[static_cast<size_t>(r)] < basis_[static_cast<size_t>(best)])) {
                best = r;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(int row, int col) {
        auto& prow = tab_[static_cast<size_t>(row)];
        const Rational inv = Rational(1) / prow[static_cast<size_t>(col)];
        for (auto& x : prow) x *= inv;
        for (int r = 0; r <= k_; ++r) {
            if (r == row) continue;
            auto& trow = tab_[static_cast<size_t>(r)];
            const Rational f = trow[static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < width(); ++j)
                trow[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        basis_[static_cast<size_t>(row)] = col;
    }

    // At a zero-objective optimum, swap basic artificials for original
    // columns where possible. Rows where no original column has a nonzero
    // entry are redundant equalities; their artificial stays basic at 0.
    void drive_out_artificials() {
        for (int r = 0; r < k_; ++r) {
            if (basis_[static_cast<size_t>(r)] < n_) continue;
            for (int j = 0; j < n_; ++j) {
                if (tab_[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    RVector witness() const {
        RVector x(n_);
        for (int i = 0; i < n_; ++i) x[i] = 0;
        for (int r = 0; r < k_; ++r)
            if (basis_[static_cast<size_t>(r)] < n_)
                x[basis_[static_cast<size_t>(r)]] = tab_[static_cast<size_t>(r)][static_cast<size_t>(width() - 1)];
        return x;
    }

    // Simplex multipliers read off the artificial columns: y_i = 1 - rc(a_i),
    // mapped back through the row sign flips.
    RVector certificate() const {
        RVector y(k_);
        const auto& cost = tab_.back();
        for (int i = 0; i < k_; ++i)
            y[i] = (Rational(1) - cost[static_cast<size_t>(n_ + i)]) * sign_[static_cast<size_t>(i)];
        return y;
    }

    int k_;
    int n_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> sign_;
    std::vector<int> basis_;
};

} // namespace

FeasibilityOutcome solve_feasibility(const FeasibilitySystem& sys) {
    Phase1 solver(sys.e, sys.f);
    FeasibilityOutcome out = solver.run();
    if (out.feasible) {
        const RVector& x = *out.witness;
        if (!x.is_nonnegative() || !(sys.e * x == sys.f))
            throw std::logic_error("simplex produced a witness that fails substitution");
    } else {
        const RVector& y = *out.certificate;
        RVector yte = sys.e.transpose() * y;
        bool ok = true;
        for (int j = 0; j < yte.size(); ++j)
            if (yte[j] > 0) ok = false;
        Rational ytf = 0;
        for (int i = 0; i < y.size(); ++i) ytf += y[i] * sys.f[i];
        if (!ok || !(ytf > 0))
            throw std::logic_error("simplex produced a Farkas certificate that fails substitution");
    }
    return out;
}

} // namespace majorkit

#ifndef MAJORKIT_PRESERVERS_HPP
#define MAJORKIT_PRESERVERS_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "majorkit/matrix.hpp"

namespace majorkit {

/// Linear operator on R^n, held as its matrix in the standard basis.
struct VectorOperator {
    RMatrix mat;

    explicit VectorOperator(RMatrix m) : mat(std::move(m)) {
        if (mat.rows() != mat.cols()) throw dimension_error("vector operator matrix must be square");
    }
    int n() const { return mat.rows(); }
    RVector apply(const RVector& v) const { return mat * v; }
};

/// Linear operator on n x m matrices, stored as the m^2 blocks of its
/// standard decomposition: block (i, j) acts from input column j to output
/// column i, so apply(X) column k equals sum_j block(k, j) * X column j.
class OperatorGrid {
public:
    OperatorGrid(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    const RMatrix& block(int i, int j) const { return blocks_[static_cast<size_t>(i) * m_ + j]; }
    RMatrix& block(int i, int j) { return blocks_[static_cast<size_t>(i) * m_ + j]; }

    RMatrix apply(const RMatrix& x) const;

    bool operator==(const OperatorGrid&) const = default;

private:
    int n_;
    int m_;
    std::vector<RMatrix> blocks_;
};

/// Block decomposition of an operator given as its nm x nm matrix over the
/// column-major vectorization (stacked columns).
OperatorGrid decompose_operator(const RMatrix& vectorized, int n, int m);

/// Block decomposition of an operator given as a callback; evaluated on the
/// nm basis matrices e_q e_j^t.
OperatorGrid decompose_operator(const std::function<RMatrix(const RMatrix&)>& phi, int n, int m);

/// Inverse of the decomposition: the nm x nm matrix over the column-major
/// vectorization.
RMatrix compose_operator(const OperatorGrid& g);

// --- classified normal forms ----------------------------------------------

/// x -> (e^t x) s: rank-one with constant columns.
struct Ando1 {
    RVector s;
};

/// x -> alpha P x + beta J x.
struct Ando2 {
    Rational alpha;
    Rational beta;
    Permutation p;
};

/// x -> (v e^t + lambda P) x: the zero-sum majorization preserver form.
struct ZeroSumForm {
    RVector v;
    Rational lambda;
    Permutation p;
};

/// X -> sum_j (e^t X^(j)) S_j.
struct LiPoon1 {
    std::vector<RMatrix> s;
};

/// X -> P X R + J X S.
struct LiPoon2 {
    RMatrix r;
    RMatrix s;
    Permutation p;
};

/// X -> sum_j (e^t X^(j)) S_j + P X R. constraint_ok records whether R = 0 or
/// sum_j S_j has constant columns (equals e v^t), the extra condition that
/// makes the form a genuine preserver on column stochastic matrices.
struct CSForm {
    std::vector<RMatrix> s;
    Permutation p;
    RMatrix r;
    bool constraint_ok;
};

using AndoForm = std::variant<Ando1, Ando2>;
using StrongPreserverForm = std::variant<LiPoon1, LiPoon2>;

// --- classifiers -----------------------------------------------------------

/// Structural decision of X = v e^t + lambda P. For n >= 3 every row must be
/// constant apart from at most one deviant entry, deviant positions must form
/// a permutation, and all deviations must agree; n = 2 succeeds exactly when
/// the column sums coincide (canonical representation has P = I); n = 1
/// always succeeds with lambda = 0.
std::optional<ZeroSumForm> classify_zero_sum_preserver(const VectorOperator& x);

/// The second representation of the same operator for n = 2:
/// v e^t + lambda P = (v + lambda e) e^t - lambda P', with P' the other
/// permutation. nullopt for n != 2.
std::optional<ZeroSumForm> zero_sum_alternate_form(const ZeroSumForm& f);

/// Condition on column differences: every X^(i) - X^(j) (i != j) has exactly
/// two nonzero entries, +alpha and -alpha, for one common alpha > 0. Returns
/// alpha. Equivalent to classify_zero_sum_preserver succeeding with
/// lambda != 0, and then alpha = |lambda|.
std::optional<Rational> check_condition_alpha(const VectorOperator& x);

/// Vector majorization preserver: constant columns (Ando1) or
/// alpha P + beta J (Ando2). Every such operator also has a ZeroSumForm.
std::optional<AndoForm> classify_vector_preserver(const VectorOperator& x);

/// Preservers of majorization for probability distributions coincide with
/// vector majorization preservers; alias kept for API clarity.
std::optional<AndoForm> classify_prob_preserver(const VectorOperator& x);

/// Global strong majorization preserver on all of M_{n,m}: either every
/// block has constant columns (LiPoon1) or every block is r P + s J for a
/// common P (LiPoon2).
std::optional<StrongPreserverForm> classify_strong_preserver(const OperatorGrid& g);

/// Necessary form of a preserver on column stochastic matrices: every block
/// classifies as v e^t + lambda P with one shared P across all blocks with
/// lambda != 0 (for n = 2 both representations of each block are tried to
/// reach consensus). Returns the assembled (S_1..S_m, P, R) with the
/// constraint flag; reconstruction is re-verified exactly.
std::optional<CSForm> extract_cs_preserver_form(const OperatorGrid& g);

/// True iff the operator preserves strong majorization on column stochastic
/// matrices: extraction succeeds and the constraint holds. This is an exact
/// characterization, not a heuristic.
bool is_cs_preserver(const OperatorGrid& g);

// --- constructors ----------------------------------------------------------

VectorOperator make_ando1(const RVector& s);
VectorOperator make_ando2(const Rational& alpha, const Rational& beta, const Permutation& p);
VectorOperator make_zero_sum(const RVector& v, const Rational& lambda, const Permutation& p);
/// s holds m matrices of shape n x m.
OperatorGrid make_li_poon1(const std::vector<RMatrix>& s);
OperatorGrid make_li_poon2(const Permutation& p, const RMatrix& r, const RMatrix& s);
OperatorGrid make_cs_form(const std::vector<RMatrix>& s, const Permutation& p, const RMatrix& r);

} // namespace majorkit

#endif

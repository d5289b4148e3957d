#ifndef MAJORKIT_MATRIX_HPP
#define MAJORKIT_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "majorkit/rational.hpp"

namespace majorkit {

class Permutation;

/// Dense column vector of exact rationals, length fixed at construction (n >= 1).
class RVector {
public:
    explicit RVector(int n) : e_(check_len(n)) {}
    RVector(std::initializer_list<Rational> init) : e_(init) { check_len(static_cast<int>(e_.size())); }
    explicit RVector(std::vector<Rational> entries) : e_(std::move(entries)) {
        check_len(static_cast<int>(e_.size()));
    }

    int size() const { return static_cast<int>(e_.size()); }
    const Rational& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& entries() const { return e_; }

    bool operator==(const RVector&) const = default;

    RVector operator+(const RVector& o) const;
    RVector operator-(const RVector& o) const;
    RVector operator-() const;
    RVector operator*(const Rational& s) const;
    RVector operator/(const Rational& s) const;

    Rational sum() const;
    bool is_nonnegative() const;
    bool is_zero() const;

private:
    static int check_len(int n);
    std::vector<Rational> e_;
};

std::string to_string(const RVector& v);

/// Dense n x m matrix of exact rationals, row-major storage, shape fixed at
/// construction.
class RMatrix {
public:
    RMatrix(int rows, int cols);

    static RMatrix identity(int n);
    static RMatrix zero(int rows, int cols);
    static RMatrix ones(int rows, int cols);
    /// Outer product a b^t.
    static RMatrix outer(const RVector& a, const RVector& b);
    static RMatrix from_columns(const std::vector<RVector>& cols);
    static RMatrix diagonal(const RVector& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RVector column(int j) const;
    RVector row(int i) const;
    void set_column(int j, const RVector& c);
    void set_row(int i, const RVector& r);
    RVector column_sums() const;
    RVector row_sums() const;

    bool operator==(const RMatrix&) const = default;

    RMatrix operator+(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix operator-() const;
    RMatrix operator*(const Rational& s) const;
    RMatrix operator*(const RMatrix& o) const;
    RVector operator*(const RVector& v) const;

    RMatrix transpose() const;
    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_zero_one() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

std::string to_string(const RMatrix& m);

/// Bijection on {1..n}, stored 0-based: map()[i] = j means the matrix form has
/// a 1 at row i, column j, so (P v)_i = v_j.
class Permutation {
public:
    static Permutation identity(int n);
    /// Transposition of positions i and j (0-based), P_(ij).
    static Permutation transposition(int n, int i, int j);
    explicit Permutation(std::vector<int> map);

    int size() const { return static_cast<int>(map_.size()); }
    const std::vector<int>& map() const { return map_; }

    RVector apply(const RVector& v) const;
    /// Row permutation: (P A)_(i) = A_(map[i]).
    RMatrix apply_rows(const RMatrix& a) const;
    Permutation inverse() const;
    /// Composition as matrices: (*this) o other, applied right-to-left.
    Permutation compose(const Permutation& other) const;
    RMatrix to_matrix() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

// --- stochasticity predicates -------------------------------------------

bool is_row_stochastic(const RMatrix& a);
bool is_column_stochastic(const RMatrix& a);
bool is_doubly_stochastic(const RMatrix& a);

/// True iff v >= 0 and e^t v = 1 (membership in the probability simplex).
bool is_distribution(const RVector& v);
/// True iff e^t v = 0.
bool is_zero_sum(const RVector& v);

// --- basic vector operations ---------------------------------------------

/// Non-increasing rearrangement together with the permutation realizing it:
/// sigma applied to v equals the sorted vector. Stable: ties keep their
/// original relative order, so the witness is deterministic.
std::pair<RVector, Permutation> sort_desc(const RVector& v);

/// Sum of the positive entries of v (v^+).
Rational positive_part_sum(const RVector& v);

// --- exact linear algebra utilities --------------------------------------

Rational determinant(const RMatrix& a);

/// Solves A x = b for square A by Gauss-Jordan elimination; nullopt when A is
/// singular.
std::optional<RVector> solve_square_system(const RMatrix& a, const RVector& b);

} // namespace majorkit

#endif

#include "majorkit/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace majorkit {

namespace {

void require_same_size(int a, int b, const char* op) {
    if (a != b)
        throw dimension_error(std::string(op) + ": lengths " + std::to_string(a) + " and " +
                              std::to_string(b) + " differ");
}

void require_same_shape(const RMatrix& a, const RMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()) + " differ");
}

} // namespace

int RVector::check_len(int n) {
    if (n < 1) throw dimension_error("vector length must be >= 1");
    return n;
}

RVector RVector::operator+(const RVector& o) const {
    require_same_size(size(), o.size(), "vector add");
    RVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = (*this)[i] + o[i];
    return r;
}

RVector RVector::operator-(const RVector& o) const {
    require_same_size(size(), o.size(), "vector subtract");
    RVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = (*this)[i] - o[i];
    return r;
}

RVector RVector::operator-() const {
    RVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = -(*this)[i];
    return r;
}

RVector RVector::operator*(const Rational& s) const {
    RVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = (*this)[i] * s;
    return r;
}

RVector RVector::operator/(const Rational& s) const {
    if (s == 0) throw std::domain_error("division of vector by zero scalar");
    RVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = (*this)[i] / s;
    return r;
}

Rational RVector::sum() const {
    Rational s = 0;
    for (const auto& x : e_) s += x;
    return s;
}

bool RVector::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x >= 0; });
}

bool RVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

std::string to_string(const RVector& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

RMatrix::RMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw dimension_error("matrix shape must be >= 1x1");
    a_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RMatrix RMatrix::identity(int n) {
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RMatrix RMatrix::zero(int rows, int cols) { return RMatrix(rows, cols); }

RMatrix RMatrix::ones(int rows, int cols) {
    RMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 1;
    return m;
}

RMatrix RMatrix::outer(const RVector& a, const RVector& b) {
    RMatrix m(a.size(), b.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) m.at(i, j) = a[i] * b[j];
    return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVector>& cols) {
    if (cols.empty()) throw dimension_error("from_columns: no columns");
    RMatrix m(cols.front().size(), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) m.set_column(j, cols[static_cast<size_t>(j)]);
    return m;
}

RMatrix RMatrix::diagonal(const RVector& d) {
    RMatrix m(d.size(), d.size());
    for (int i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RVector RMatrix::column(int j) const {
    RVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RVector RMatrix::row(int i) const {
    RVector r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void RMatrix::set_column(int j, const RVector& c) {
    require_same_size(c.size(), rows_, "set_column");
    for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
}

void RMatrix::set_row(int i, const RVector& r) {
    require_same_size(r.size(), cols_, "set_row");
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
}

RVector RMatrix::column_sums() const {
    RVector s(cols_);
    for (int j = 0; j < cols_; ++j) {
        Rational acc = 0;
        for (int i = 0; i < rows_; ++i) acc += at(i, j);
        s[j] = acc;
    }
    return s;
}

RVector RMatrix::row_sums() const {
    RVector s(rows_);
    for (int i = 0; i < rows_; ++i) s[i] = row(i).sum();
    return s;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
    require_same_shape(*this, o, "matrix add");
    RMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
    require_same_shape(*this, o, "matrix subtract");
    RMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

RMatrix RMatrix::operator-() const {
    RMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

RMatrix RMatrix::operator*(const Rational& s) const {
    RMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    if (cols_ != o.rows())
        throw dimension_error("matrix product: inner dimensions " + std::to_string(cols_) + " and " +
                              std::to_string(o.rows()) + " differ");
    RMatrix r(rows_, o.cols());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols(); ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RVector RMatrix::operator*(const RVector& v) const {
    require_same_size(cols_, v.size(), "matrix-vector product");
    RVector r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

RMatrix RMatrix::transpose() const {
    RMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

bool RMatrix::is_nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x >= 0; });
}

bool RMatrix::is_zero_one() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0 || x == 1; });
}

std::string to_string(const RMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    os << "]";
    return os.str();
}

Permutation Permutation::identity(int n) {
    std::vector<int> map(static_cast<size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.map_[static_cast<size_t>(i)], p.map_[static_cast<size_t>(j)]);
    return p;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    const int n = static_cast<int>(map_.size());
    if (n < 1) throw dimension_error("permutation size must be >= 1");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x : map_) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
            throw dimension_error("permutation map is not a bijection on {1..n}");
        seen[static_cast<size_t>(x)] = true;
    }
}

RVector Permutation::apply(const RVector& v) const {
    require_same_size(v.size(), size(), "permutation apply");
    RVector r(v.size());
    for (int i = 0; i < v.size(); ++i) r[i] = v[map_[static_cast<size_t>(i)]];
    return r;
}

RMatrix Permutation::apply_rows(const RMatrix& a) const {
    require_same_size(a.rows(), size(), "permutation row apply");
    RMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) r.set_row(i, a.row(map_[static_cast<size_t>(i)]));
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(map_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    require_same_size(size(), other.size(), "permutation compose");
    std::vector<int> map(map_.size());
    for (int i = 0; i < size(); ++i)
        map[static_cast<size_t>(i)] = other.map_[static_cast<size_t>(map_[static_cast<size_t>(i)])];
    return Permutation(std::move(map));
}

RMatrix Permutation::to_matrix() const {
    RMatrix m(size(), size());
    for (int i = 0; i < size(); ++i) m.at(i, map_[static_cast<size_t>(i)]) = 1;
    return m;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (map_[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool is_row_stochastic(const RMatrix& a) {
    if (!a.is_nonnegative()) return false;
    for (int i = 0; i < a.rows(); ++i)
        if (a.row(i).sum() != 1) return false;
    return true;
}

bool is_column_stochastic(const RMatrix& a) {
    if (!a.is_nonnegative()) return false;
    for (int j = 0; j < a.cols(); ++j)
        if (a.column(j).sum() != 1) return false;
    return true;
}

bool is_doubly_stochastic(const RMatrix& a) {
    return a.rows() == a.cols() && is_row_stochastic(a) && is_column_stochastic(a);
}

bool is_distribution(const RVector& v) { return v.is_nonnegative() && v.sum() == 1; }

bool is_zero_sum(const RVector& v) { return v.sum() == 0; }

std::pair<RVector, Permutation> sort_desc(const RVector& v) {
    std::vector<int> idx(static_cast<size_t>(v.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return v[i] > v[j]; });
    Permutation sigma(std::move(idx));
    return {sigma.apply(v), sigma};
}

Rational positive_part_sum(const RVector& v) {
    Rational s = 0;
    for (int i = 0; i < v.size(); ++i)
        if (v[i] > 0) s += v[i];
    return s;
}

Rational determinant(const RMatrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("determinant of non-square matrix");
    const int n = a.rows();
    RMatrix m = a;
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        const Rational inv = Rational(1) / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m.at(r, c) == 0) continue;
            const Rational f = m.at(r, c) * inv;
            for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::optional<RVector> solve_square_system(const RMatrix& a, const RVector& b) {
    if (a.rows() != a.cols()) throw dimension_error("solve: non-square matrix");
    if (a.rows() != b.size()) throw dimension_error("solve: right-hand side length mismatch");
    const int n = a.rows();
    RMatrix m(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n) = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != c)
            for (int j = 0; j <= n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
        const Rational inv = Rational(1) / m.at(c, c);
        for (int j = c; j <= n; ++j) m.at(c, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            const Rational f = m.at(r, c);
            for (int j = c; j <= n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    RVector x(n);
    for (int i = 0; i < n; ++i) x[i] = m.at(i, n);
    return x;
}

} // namespace majorkit

#include "majorkit/matrix_major.hpp"

#include "majorkit/rng.hpp"
#include "majorkit/vector_major.hpp"

namespace majorkit {

namespace {

void require_same_shape(const RMatrix& a, const RMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": shapes differ");
}

// D is row-major vectorized: d_{rc} = x[r*n + c].
FeasibilitySystem strong_witness_system(const RMatrix& a, const RMatrix& b) {
    const int n = a.rows();
    const int m = a.cols();
    const int vars = n * n;
    const int eqs = n * m + 2 * n;
    RMatrix e(eqs, vars);
    RVector f(eqs);
    int row = 0;
    // (DB)_{ij} = a_{ij}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j, ++row) {
            for (int c = 0; c < n; ++c) e.at(row, i * n + c) = b.at(c, j);
            f[row] = a.at(i, j);
        }
    // row sums of D
    for (int i = 0; i < n; ++i, ++row) {
        for (int c = 0; c < n; ++c) e.at(row, i * n + c) = 1;
        f[row] = 1;
    }
    // column sums of D
    for (int c = 0; c < n; ++c, ++row) {
        for (int i = 0; i < n; ++i) e.at(row, i * n + c) = 1;
        f[row] = 1;
    }
    return FeasibilitySystem(std::move(e), std::move(f));
}

RMatrix unpack_square(const RVector& x, int n) {
    RMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = x[i * n + j];
    return d;
}

} // namespace

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Vector: return "vector";
        case Relation::Strong: return "strong";
        case Relation::Weak: return "weak";
        case Relation::Directional: return "directional";
        case Relation::StrongEquiv: return "strong-equiv";
    }
    return "?";
}

MajorizationVerdict check_strong(const RMatrix& a, const RMatrix& b) {
    require_same_shape(a, b, "strong majorization");
    MajorizationVerdict v{Relation::Strong, MajorizationVerdict::Status::Fails,
                          std::nullopt, std::nullopt, std::nullopt, 0, ""};
    if (!(a.column_sums() == b.column_sums())) {
        v.reason = "column sums differ";
        return v;
    }
    FeasibilityOutcome out = solve_feasibility(strong_witness_system(a, b));
    if (out.feasible) {
        v.status = MajorizationVerdict::Status::Holds;
        v.witness = unpack_square(*out.witness, a.rows());
        return v;
    }
    v.certificate = out.certificate;
    v.reason = "no doubly stochastic D with DB = A (Farkas certificate attached)";
    return v;
}

MajorizationVerdict check_weak(const RMatrix& a, const RMatrix& b) {
    require_same_shape(a, b, "weak majorization");
    const int n = a.rows();
    const int m = a.cols();
    MajorizationVerdict v{Relation::Weak, MajorizationVerdict::Status::Fails,
                          std::nullopt, std::nullopt, std::nullopt, 0, ""};
    RMatrix r(n, n);
    for (int i = 0; i < n; ++i) {
        // Row A_(i) as a convex combination of the rows of B.
        RMatrix e(m + 1, n);
        RVector f(m + 1);
        for (int j = 0; j < m; ++j) {
            for (int c = 0; c < n; ++c) e.at(j, c) = b.at(c, j);
            f[j] = a.at(i, j);
        }
        for (int c = 0; c < n; ++c) e.at(m, c) = 1;
        f[m] = 1;
        FeasibilityOutcome out = solve_feasibility(FeasibilitySystem(std::move(e), std::move(f)));
        if (!out.feasible) {
            v.certificate = out.certificate;
            v.reason = "row " + std::to_string(i + 1) + " of A is not a convex combination of the rows of B";
            return v;
        }
        r.set_row(i, *out.witness);
    }
    v.status = MajorizationVerdict::Status::Holds;
    v.witness = std::move(r);
    return v;
}

MajorizationVerdict check_directional(const RMatrix& a, const RMatrix& b, long budget,
                                      std::uint64_t seed) {
    require_same_shape(a, b, "directional majorization");
    const int m = a.cols();
    if (m > 16)
        throw precondition_error("directional check: exhaustive (0,1)-direction pass requires m <= 16");
    MajorizationVerdict v{Relation::Directional, MajorizationVerdict::Status::NotRefuted,
                          std::nullopt, std::nullopt, std::nullopt, 0, ""};

    // Column-sum screen: e^t A != e^t B refutes with a standard basis direction.
    const RVector ca = a.column_sums();
    const RVector cb = b.column_sums();
    for (int j = 0; j < m; ++j) {
        if (ca[j] != cb[j]) {
            RVector dir(m);
            dir[j] = 1;
            v.status = MajorizationVerdict::Status::Refuted;
            v.direction = std::move(dir);
            v.reason = "column sums differ";
            return v;
        }
    }

    if (check_strong(a, b).holds()) {
        v.status = MajorizationVerdict::Status::Holds;
        v.reason = "strong majorization holds, which implies directional";
        return v;
    }

    long tried = 0;
    auto test = [&](const RVector& dir) -> bool {
        ++tried;
        return check_vector_majorization(a * dir, b * dir);
    };

    // All (0,1)-directions; v = 0 is trivial, skip it.
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        RVector dir(m);
        for (int j = 0; j < m; ++j) dir[j] = (mask >> j) & 1u ? 1 : 0;
        if (!test(dir)) {
            v.status = MajorizationVerdict::Status::Refuted;
            v.direction = std::move(dir);
            v.trials = tried;
            return v;
        }
    }

    // Random rational directions, entries p/q with small p, q.
    Rng rng = Rng(seed).split(0x64697265);
    for (long t = 0; t < budget; ++t) {
        RVector dir(m);
        for (int j = 0; j < m; ++j)
            dir[j] = rat(rng.between(-6, 6), rng.between(1, 4));
        if (!test(dir)) {
            v.status = MajorizationVerdict::Status::Refuted;
            v.direction = std::move(dir);
            v.trials = tried;
            return v;
        }
    }
    v.trials = tried;
    return v;
}

std::optional<Permutation> check_strong_equiv(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    const int n = a.rows();
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < n; ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            if (a.row(i) == b.row(r)) {
                map[static_cast<size_t>(i)] = r;
                used[static_cast<size_t>(r)] = true;
                break;
            }
        }
        if (map[static_cast<size_t>(i)] < 0) return std::nullopt;
    }
    return Permutation(std::move(map));
}

} // namespace majorkit

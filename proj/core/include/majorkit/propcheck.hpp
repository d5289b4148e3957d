#ifndef MAJORKIT_PROPCHECK_HPP
#define MAJORKIT_PROPCHECK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majorkit/matrix_major.hpp"
#include "majorkit/preservers.hpp"
#include "majorkit/rng.hpp"

namespace majorkit {

enum class Domain { All, Distributions, ZeroSum, ColumnStochastic, ZeroOne };

std::string domain_name(Domain d);

/// A relation together with the domain its instances are drawn from.
/// Supported pairs: vector x {all, distributions, zero-sum, zero-one},
/// strong x {all, column-stochastic, zero-one}, weak x {all}.
struct RelationSpec {
    Relation relation;
    Domain domain;
};

struct VectorPair {
    RVector a;
    RVector b;
};

struct MatrixPair {
    RMatrix a;
    RMatrix b;
};

/// Draws a pair satisfying the relation on the domain (for hold-by-
/// construction pairs, A = DB with D drawn from the matching stochastic
/// class). Every pair is re-verified before being returned; unsupported
/// (relation, domain) combinations raise precondition_error.
VectorPair gen_vector_pair(const RelationSpec& spec, int n, Rng& rng);
MatrixPair gen_matrix_pair(const RelationSpec& spec, int n, int m, Rng& rng);
MatrixPair gen_pair(const RelationSpec& spec, int n, int m, std::uint64_t seed);

/// A found violation: the original pair satisfies the relation, the images
/// do not. Vectors are carried as single-column matrices. The transcript
/// records the failed check; re-running the checks on the stored data
/// reproduces it.
struct Counterexample {
    RMatrix a;
    RMatrix b;
    RMatrix image_a;
    RMatrix image_b;
    std::string transcript;
    bool from_battery;
    long trial_index;
};

/// Searches for a pair witnessing that the operator is not a preserver of
/// the relation on the domain. A fixed structured battery runs first
/// (permutation pairs and basis-difference pairs, the shapes violations
/// concentrate on), then `trials` seeded random pairs. Returns the first
/// counterexample, or nullopt.
std::optional<Counterexample> fuzz_preserver(const VectorOperator& op, const RelationSpec& spec,
                                             long trials, std::uint64_t seed);
std::optional<Counterexample> fuzz_preserver(const OperatorGrid& op, const RelationSpec& spec,
                                             long trials, std::uint64_t seed);

/// True iff the stored pair still satisfies the relation and the stored
/// images still violate it (images are recomputed from the operator).
bool verify_counterexample(const VectorOperator& op, const RelationSpec& spec,
                           const Counterexample& ce);
bool verify_counterexample(const OperatorGrid& op, const RelationSpec& spec,
                           const Counterexample& ce);

// --- property suite ---------------------------------------------------------

struct SuiteSizes {
    int max_n = 5;
    int max_m = 4;
    long cases = 200;
};

struct Property {
    std::string name;
    std::function<bool(Rng&, const SuiteSizes&)> run_case;
};

struct PropertyOutcome {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::optional<std::uint64_t> first_failure_seed;

    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::vector<PropertyOutcome> properties;

    bool all_pass() const;
};

/// Runs each property `sizes.cases` times on seeds derived from `seed`;
/// every failing case records its replay seed.
SuiteReport run_properties(const std::vector<Property>& props, std::uint64_t seed,
                           const SuiteSizes& sizes);

/// The registered invariance and structure properties of the library
/// (shift/scale/right-multiplication invariance of the majorization checks,
/// permutation-equivalence laws, (0,1) collapses, and the structural facts
/// about classified preservers).
std::vector<Property> standard_property_registry();

SuiteReport lemma_suite(std::uint64_t seed, const SuiteSizes& sizes = SuiteSizes{});

} // namespace majorkit

#endif

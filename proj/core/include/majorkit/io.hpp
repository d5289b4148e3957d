#ifndef MAJORKIT_IO_HPP
#define MAJORKIT_IO_HPP

#include <string>
#include <variant>

#include "majorkit/birkhoff.hpp"
#include "majorkit/matrix.hpp"
#include "majorkit/preservers.hpp"

namespace majorkit {

/// Version tag carried in every emitted JSON document.
inline constexpr const char* kSchema = "majorkit/1";

/// Matrix JSON: {"schema": "majorkit/1", "rows": n, "cols": m,
/// "data": [[row of "p/q" strings], ...]}. Entries must be exact rationals;
/// decimal values are rejected with a hint. A "schema" key, when present,
/// must match.
RMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const RMatrix& m);

/// CSV: one row per line, comma-separated rational literals.
RMatrix parse_matrix_csv(const std::string& text);
std::string matrix_to_csv(const RMatrix& m);

/// Accepts either format, sniffing on the first non-space character.
RMatrix parse_matrix(const std::string& text);

/// A vector argument may arrive as an n x 1 or 1 x n matrix.
RVector as_vector(const RMatrix& m);

using OperatorInput = std::variant<VectorOperator, OperatorGrid>;

/// Operator JSON: {"vecop": <matrix>} for an operator on R^n, or
/// {"n": n, "m": m, "blocks": [[<matrix>, ...], ...]} with blocks[i][j]
/// acting from input column j+1 to output column i+1.
OperatorInput parse_operator_json(const std::string& text);
std::string operator_to_json(const VectorOperator& op);
std::string operator_to_json(const OperatorGrid& op);

std::string decomposition_to_json(const BirkhoffDecomposition& d);

} // namespace majorkit

#endif

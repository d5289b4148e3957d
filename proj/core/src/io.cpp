#include "majorkit/io.hpp"

#include <sstream>

#include <json.hpp>

namespace majorkit {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON input");
    return j;
}

void check_schema(const json& j) {
    if (j.contains("schema") && j["schema"] != kSchema)
        throw parse_error("unsupported schema, expected \"" + std::string(kSchema) + "\"");
}

Rational rational_from_json(const json& cell) {
    if (cell.is_string()) return parse_rational(cell.get<std::string>());
    if (cell.is_number_integer()) return Rational(cell.get<long long>());
    if (cell.is_number())
        throw parse_error("floating-point values are not accepted, use an exact \"p/q\" string");
    throw parse_error("matrix entries must be rational strings");
}

RMatrix matrix_from_json(const json& j) {
    check_schema(j);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw parse_error("matrix JSON needs \"rows\", \"cols\" and \"data\"");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const json& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw parse_error("matrix \"data\" must hold exactly \"rows\" rows");
    RMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw parse_error("matrix row " + std::to_string(i + 1) + " must hold exactly \"cols\" entries");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(row[static_cast<size_t>(c)]);
    }
    return m;
}

json matrix_to_json_value(const RMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"schema", kSchema}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

} // namespace

RMatrix parse_matrix_json(const std::string& text) { return matrix_from_json(parse_json(text)); }

std::string matrix_to_json(const RMatrix& m) { return matrix_to_json_value(m).dump(); }

RMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty CSV matrix");
    const size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw parse_error("CSV rows have inconsistent lengths");
    RMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

std::string matrix_to_csv(const RMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

RMatrix parse_matrix(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty matrix input");
    return text[first] == '{' ? parse_matrix_json(text) : parse_matrix_csv(text);
}

RVector as_vector(const RMatrix& m) {
    if (m.cols() == 1) return m.column(0);
    if (m.rows() == 1) return m.row(0);
    throw dimension_error("expected a vector (n x 1 or 1 x n matrix), got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

OperatorInput parse_operator_json(const std::string& text) {
    json j = parse_json(text);
    check_schema(j);
    if (j.contains("vecop")) return VectorOperator{matrix_from_json(j["vecop"])};
    if (!j.contains("n") || !j.contains("m") || !j.contains("blocks"))
        throw parse_error("operator JSON needs either \"vecop\" or \"n\", \"m\" and \"blocks\"");
    const int n = j["n"].get<int>();
    const int m = j["m"].get<int>();
    const json& blocks = j["blocks"];
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != m)
        throw parse_error("\"blocks\" must hold m rows of m matrices");
    OperatorGrid g(n, m);
    for (int i = 0; i < m; ++i) {
        const json& row = blocks[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw parse_error("\"blocks\" row " + std::to_string(i + 1) + " must hold m matrices");
        for (int jj = 0; jj < m; ++jj) {
            RMatrix b = matrix_from_json(row[static_cast<size_t>(jj)]);
            if (b.rows() != n || b.cols() != n)
                throw parse_error("operator block (" + std::to_string(i + 1) + "," +
                                  std::to_string(jj + 1) + ") must be n x n");
            g.block(i, jj) = std::move(b);
        }
    }
    return g;
}

std::string operator_to_json(const VectorOperator& op) {
    return json{{"schema", kSchema}, {"vecop", matrix_to_json_value(op.mat)}}.dump();
}

std::string operator_to_json(const OperatorGrid& op) {
    json blocks = json::array();
    for (int i = 0; i < op.m(); ++i) {
        json row = json::array();
        for (int j = 0; j < op.m(); ++j) row.push_back(matrix_to_json_value(op.block(i, j)));
        blocks.push_back(std::move(row));
    }
    return json{{"schema", kSchema}, {"n", op.n()}, {"m", op.m()}, {"blocks", std::move(blocks)}}.dump();
}

std::string decomposition_to_json(const BirkhoffDecomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json map = json::array();
        for (int x : t.p.map()) map.push_back(x + 1);
        terms.push_back(json{{"weight", to_string(t.weight)}, {"perm", std::move(map)}});
    }
    return json{{"schema", kSchema}, {"terms", std::move(terms)}}.dump();
}

} // namespace majorkit

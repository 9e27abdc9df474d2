#pragma once

// Structured matrix format: an array of rows, each an array of [a0, a1, a2, a3] tuples
// of rational strings. Needs nlohmann/json (json.hpp) on the include path.

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <string>

namespace quatgi {

inline nlohmann::json to_json(const quaternion& q) {
    return nlohmann::json::array({to_string(q.real()), to_string(q.i_part()), to_string(q.j_part()), to_string(q.k_part())});
}

inline nlohmann::json to_json(const qmatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline quaternion quaternion_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) throw parse_error("quaternion must be a 4-element array", 0, 0);
    rational parts[4];
    for (std::size_t t = 0; t < 4; ++t) {
        std::string text;
        if (j[t].is_string())
            text = j[t].get<std::string>();
        else if (j[t].is_number_integer())
            text = std::to_string(j[t].get<long long>());
        else
            throw parse_error("quaternion component must be a rational string", 0, 0);
        auto value = parse_rational(text);
        if (!value) throw parse_error("bad rational \"" + text + "\"", 0, 0);
        parts[t] = *value;
    }
    return quaternion(parts[0], parts[1], parts[2], parts[3]);
}

inline qmatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("matrix must be an array of rows", 0, 0);
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    qmatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix rows", i + 1, 0);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = quaternion_from_json(j[i][c]);
    }
    return m;
}

}  // namespace quatgi

#pragma once

#include <quatgi/io.hpp>
#include <quatgi/matrix.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace th {

inline quatgi::quaternion q(const std::string& s) { return quatgi::parse_quaternion(s); }

inline quatgi::qmatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    quatgi::qmatrix out(m, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row) out(i, j++) = q(e);
        ++i;
    }
    return out;
}

inline std::filesystem::path data_dir() { return QUATGI_DATA_DIR; }

inline quatgi::qmatrix load(const std::string& rel) {
    std::ifstream in(data_dir() / rel);
    return quatgi::read_matrix(in);
}

}  // namespace th

#include "skewopt/intmat.hpp"

#include <sstream>

namespace skewopt {

IntMat parse_int_matrix(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::istringstream all{std::string(text)};
    std::string line;
    while (std::getline(all, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw Error("bad token in matrix row: " + line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("empty matrix text");
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != rows[0].size()) throw Error("ragged matrix text");
        for (size_t j = 0; j < rows[i].size(); j++)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

std::string to_string(const IntMat& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows; i++) {
        for (int j = 0; j < m.cols; j++) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace skewopt

#include "deadbeat/matrix_io.hpp"

#include "deadbeat/errors.hpp"

#include <fstream>
#include <sstream>

namespace deadbeat {

RationalMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

RationalMatrix read_matrix(std::istream& in) {
    std::vector<RationalVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string tok;
        RationalVector row;
        while (tokens >> tok) {
            if (tok.front() == '#') break;
            row.push_back(parse_rational(tok));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            raise(errc::parse_error, "ragged matrix row: expected " + std::to_string(rows.front().size()) +
                                         " entries, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) raise(errc::parse_error, "no matrix rows found");
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_rational(m.at(i, j));
        }
        out << '\n';
    }
}

std::string format_matrix(const RationalMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::string format_vector(const RationalVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_rational(v[i]);
    }
    out += "]";
    return out;
}

}  // namespace deadbeat

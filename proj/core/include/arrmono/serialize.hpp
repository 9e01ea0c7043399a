#pragma once

#include "arrmono/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arrmono {

// Structured matrix block, line oriented:
//   matrix <name> <rows> <cols> <ring tag> <nvars>
//   [<entry>,<entry>,...]          one line per row
//   end
// Entries: rationals as "p/q" strings, polynomials as [["c",[e..]],...].
std::string serialize_entry(const Rational& r);
std::string serialize_entry(const MultiPoly& p);
std::string serialize_entry(const LaurentPoly& p);

template <class T>
std::string serialize_matrix(const std::string& name, const Matrix<T>& m) {
    std::string out = "matrix " + name + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                      RingTraits<T>::tag + " " + std::to_string(m.nvars()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += serialize_entry(m(i, j));
        }
        out += "]\n";
    }
    return out + "end\n";
}

struct StructuredMatrix {
    std::string name;
    std::string tag;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nvars = 0;
    std::vector<std::string> row_lines;
};

// Collects every matrix block of a structured report; other lines are skipped.
std::vector<StructuredMatrix> read_structured_matrices(std::string_view text);

// Decodes a block whose ring tag matches T; throws ParseError otherwise.
template <class T>
Matrix<T> decode_matrix(const StructuredMatrix& block);

extern template Matrix<Rational> decode_matrix<Rational>(const StructuredMatrix&);
extern template Matrix<MultiPoly> decode_matrix<MultiPoly>(const StructuredMatrix&);
extern template Matrix<LaurentPoly> decode_matrix<LaurentPoly>(const StructuredMatrix&);

} // namespace arrmono

#pragma once

#include "arrmono/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arrmono {

// Human polynomial syntax, e.g. "1 - x1 + x1*x2", "x_3^-1", "2/3 y1 (y2 - y4)".
// Variables are `var` followed by a 1-based index (an optional '_' between is
// allowed). Juxtaposition multiplies. Negative powers need a Laurent target.
template <PolyKind Kind>
Poly<Kind> parse_poly(std::string_view text, std::size_t nvars, char var);

inline LaurentPoly parse_laurent(std::string_view text, std::size_t nvars) {
    return parse_poly<PolyKind::Laurent>(text, nvars, 'x');
}
inline MultiPoly parse_multipoly(std::string_view text, std::size_t nvars) {
    return parse_poly<PolyKind::Ordinary>(text, nvars, 'y');
}

// Splits text into lines with '#' comments and surrounding blanks removed;
// empty lines are dropped.
std::vector<std::string> content_lines(std::string_view text);

std::string read_file(const std::string& path);

// One row per line, entries separated by commas.
template <PolyKind Kind>
Matrix<Poly<Kind>> parse_poly_matrix(std::string_view text, std::size_t nvars, char var);

inline Matrix<LaurentPoly> parse_laurent_matrix(std::string_view text, std::size_t nvars) {
    return parse_poly_matrix<PolyKind::Laurent>(text, nvars, 'x');
}
inline Matrix<MultiPoly> parse_multipoly_matrix(std::string_view text, std::size_t nvars) {
    return parse_poly_matrix<PolyKind::Ordinary>(text, nvars, 'y');
}

} // namespace arrmono

#pragma once

// Reference matrices for the four-line example (three lines through the
// origin plus one generic line), kept as text so the oracle is an independent
// transcription rather than anything computed.

#include "arrmono/text.hpp"

#include <string>

namespace expected {

inline const char* const kDelta0 = "x1 - 1, x2 - 1, x3 - 1, x4 - 1";

inline const char* const kDelta1 =
    "x3 - x2 x3, 1 - x3,    1 - x4, 0,      0\n"
    "x1 x3 - 1,  x1 - x1 x3, 0,     1 - x4, 0\n"
    "1 - x2,     x1 x2 - 1,  0,     0,      1 - x4\n"
    "0,          0,          x1 - 1, x2 - 1, x3 - 1\n";

inline const char* const kMu0 = "y1, y2, y3, y4";

inline const char* const kMu1 =
    "-y2,     -y3,     -y4, 0,   0\n"
    "y1 + y3, -y3,     0,   -y4, 0\n"
    "-y2,     y1 + y2, 0,   0,   -y4\n"
    "0,       0,       y1,  y2,  y3\n";

inline const char* const kPhi1 =
    "1 - x1 + x1 x2, 1 - x2, 0, 0\n"
    "x1 - x1^2,      x1,     0, 0\n"
    "0,              0,      1, 0\n"
    "0,              0,      0, 1\n";

inline const char* const kPhi2 =
    "x1 x2,  0, 0,              0,      0\n"
    "x2 - 1, 1, 0,              0,      0\n"
    "0,      0, 1 - x1 + x1 x2, 1 - x2, 0\n"
    "0,      0, x1 - x1^2,      x1,     0\n"
    "0,      0, 0,              0,      1\n";

inline const char* const kOmega1 =
    "y2,  -y2, 0, 0\n"
    "-y1, y1,  0, 0\n"
    "0,   0,   0, 0\n"
    "0,   0,   0, 0\n";

inline const char* const kOmega2 =
    "y1 + y2, 0, 0,   0,   0\n"
    "y2,      0, 0,   0,   0\n"
    "0,       0, y2,  -y2, 0\n"
    "0,       0, -y1, y1,  0\n"
    "0,       0, 0,   0,   0\n";

inline const char* const kXiNonresonant =
    "x4 - 1,     0\n"
    "0,          x4 - 1\n"
    "x3 - x2 x3, 1 - x3\n"
    "x1 x3 - 1,  x1 - x1 x3\n"
    "1 - x2,     x1 x2 - 1\n";

inline const char* const kUpsilonNonresonant =
    "y4,      0\n"
    "0,       y4\n"
    "-y2,     -y3\n"
    "y1 + y3, -y3\n"
    "-y2,     y1 + y2\n";

inline const char* const kPhiBarNonresonant = "x1 x2, 0\nx2 - 1, 1\n";
inline const char* const kOmegaBarNonresonant = "y1 + y2, 0\ny2, 0\n";

inline const char* const kXiResonant =
    "x1 x2 - 1, 0,      0\n"
    "x2 - 1,    0,      0\n"
    "0,         x2 - 1, 0\n"
    "0,         1 - x1, x3 - 1\n"
    "0,         0,      1 - x2\n";

inline const char* const kUpsilonResonant =
    "y1 + y2, 0,   0\n"
    "y2,      0,   0\n"
    "0,       y2,  0\n"
    "0,       -y1, y3\n"
    "0,       0,   -y2\n";

inline const char* const kPhiBarResonant = "x1 x2, 0, 0\n0, x1 x2, 1 - x3\n0, 0, 1\n";
inline const char* const kOmegaBarResonant = "y1 + y2, 0, 0\n0, y1 + y2, -y3\n0, 0, 0\n";

inline arrmono::Matrix<arrmono::LaurentPoly> laurent(const char* text) {
    return arrmono::parse_laurent_matrix(text, 4);
}
inline arrmono::Matrix<arrmono::MultiPoly> poly(const char* text) {
    return arrmono::parse_multipoly_matrix(text, 4);
}

inline std::string data(const std::string& name) { return std::string(ARRMONO_DATA_DIR) + "/example/" + name; }

} // namespace expected

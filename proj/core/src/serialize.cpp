#include "arrmono/serialize.hpp"

#include "arrmono/text.hpp"

#include <json.hpp>

#include <sstream>

namespace arrmono {

std::string serialize_entry(const Rational& r) { return "\"" + to_string(r) + "\""; }
std::string serialize_entry(const MultiPoly& p) { return p.serialize(); }
std::string serialize_entry(const LaurentPoly& p) { return p.serialize(); }

std::vector<StructuredMatrix> read_structured_matrices(std::string_view text) {
    std::vector<StructuredMatrix> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("matrix ", 0) != 0) continue;
        std::istringstream head(line);
        std::string keyword;
        StructuredMatrix block;
        if (!(head >> keyword >> block.name >> block.rows >> block.cols >> block.tag >> block.nvars))
            throw ParseError("bad matrix header '" + line + "'");
        for (std::size_t i = 0; i < block.rows; ++i) {
            if (!std::getline(in, line)) throw ParseError("matrix " + block.name + " ends early");
            block.row_lines.push_back(line);
        }
        if (!std::getline(in, line) || line != "end") throw ParseError("matrix " + block.name + " lacks 'end'");
        out.push_back(std::move(block));
    }
    return out;
}

namespace {

Rational decode_rational(const nlohmann::json& j) {
    if (!j.is_string()) throw ParseError("coefficient must be a quoted rational, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

template <class P>
P decode_poly(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_array()) throw ParseError("polynomial must be an array, got " + j.dump());
    P p(nvars);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array() || term[1].size() != nvars)
            throw ParseError("bad term " + term.dump());
        Monomial m(term[1].get<std::vector<int>>());
        try {
            p.add_term(m, decode_rational(term[0]));
        } catch (const std::domain_error& e) {
            throw ParseError(e.what());
        }
    }
    return p;
}

template <class T>
T decode_entry(const nlohmann::json& j, std::size_t nvars) {
    if constexpr (std::is_same_v<T, Rational>)
        return decode_rational(j);
    else
        return decode_poly<T>(j, nvars);
}

} // namespace

template <class T>
Matrix<T> decode_matrix(const StructuredMatrix& block) {
    if (block.tag != RingTraits<T>::tag)
        throw ParseError("matrix " + block.name + " has ring '" + block.tag + "', expected '" + RingTraits<T>::tag + "'");
    T zero;
    if constexpr (std::is_same_v<T, Rational>)
        zero = Rational(0);
    else
        zero = T(block.nvars);
    Matrix<T> m(block.rows, block.cols, zero);
    for (std::size_t i = 0; i < block.rows; ++i) {
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(block.row_lines[i]);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("matrix " + block.name + " row " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!row.is_array() || row.size() != block.cols)
            throw ParseError("matrix " + block.name + " row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t j = 0; j < block.cols; ++j) m(i, j) = decode_entry<T>(row[j], block.nvars);
    }
    return m;
}

template Matrix<Rational> decode_matrix<Rational>(const StructuredMatrix&);
template Matrix<MultiPoly> decode_matrix<MultiPoly>(const StructuredMatrix&);
template Matrix<LaurentPoly> decode_matrix<LaurentPoly>(const StructuredMatrix&);

} // namespace arrmono

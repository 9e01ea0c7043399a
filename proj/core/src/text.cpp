#include "arrmono/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace arrmono {

namespace {

template <PolyKind Kind>
class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars, char var)
        : text_(text), nvars_(nvars), var_(var) {}

    Poly<Kind> parse() {
        auto p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    using P = Poly<Kind>;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool at_factor_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
    }

    P expression() {
        P sum(nvars_);
        bool first = true;
        while (true) {
            skip_space();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            P t = term();
            if (sign < 0) t = -t;
            sum += t;
            first = false;
        }
        return sum;
    }

    P term() {
        if (!at_factor_start()) fail("expected a coefficient, variable or '('");
        P prod = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                prod = prod * factor();
            } else if (at_factor_start()) {
                prod = prod * factor();
            } else {
                break;
            }
        }
        return prod;
    }

    long read_int() {
        skip_space();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    P factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        P base(nvars_);
        if (c == '(') {
            ++pos_;
            base = expression();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            base = P::constant(nvars_, parse_rational(text_.substr(start, pos_ - start)));
        } else if (c == var_) {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
            long idx = read_int();
            if (idx < 1 || static_cast<std::size_t>(idx) > nvars_)
                fail("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(nvars_));
            base = P::variable(nvars_, static_cast<std::size_t>(idx - 1));
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (peek('^')) {
            ++pos_;
            long e = read_int();
            if (e < 0) {
                // Only single monomials invert inside the Laurent ring.
                if constexpr (Kind == PolyKind::Ordinary) fail("negative power in an ordinary polynomial");
                if (base.size() != 1 || abs(base.leading_coefficient()) != 1)
                    fail("negative power of a non-monomial");
                const auto& [m, coeff] = *base.terms().begin();
                Monomial powered(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) powered[i] = m[i] * static_cast<int>(e);
                Rational cf = (coeff < 0 && e % 2 != 0) ? Rational(-1) : Rational(1);
                return P::term(powered, cf);
            }
            P r = P::constant(nvars_, 1);
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    std::string_view text_;
    std::size_t nvars_;
    char var_;
    std::size_t pos_ = 0;
};

} // namespace

template <PolyKind Kind>
Poly<Kind> parse_poly(std::string_view text, std::size_t nvars, char var) {
    return PolyParser<Kind>(text, nvars, var).parse();
}

template MultiPoly parse_poly<PolyKind::Ordinary>(std::string_view, std::size_t, char);
template LaurentPoly parse_poly<PolyKind::Laurent>(std::string_view, std::size_t, char);

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        if (!line.empty()) lines.emplace_back(line);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <PolyKind Kind>
Matrix<Poly<Kind>> parse_poly_matrix(std::string_view text, std::size_t nvars, char var) {
    std::vector<std::vector<Poly<Kind>>> rows;
    for (const auto& line : content_lines(text)) {
        std::vector<Poly<Kind>> row;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            row.push_back(parse_poly<Kind>(std::string_view(line).substr(start, comma - start), nvars, var));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("matrix row " + std::to_string(rows.size() + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    return Matrix<Poly<Kind>>::from_rows(rows, Poly<Kind>(nvars));
}

template Matrix<MultiPoly> parse_poly_matrix<PolyKind::Ordinary>(std::string_view, std::size_t, char);
template Matrix<LaurentPoly> parse_poly_matrix<PolyKind::Laurent>(std::string_view, std::size_t, char);

} // namespace arrmono

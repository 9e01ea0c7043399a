#include "arrmono/free_group.hpp"

#include "arrmono/errors.hpp"
#include "arrmono/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace arrmono {

FreeWord::FreeWord(std::vector<Letter> letters) {
    for (const auto& l : letters) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord FreeWord::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv) l.exp = -l.exp;
    FreeWord w;
    w.letters_ = std::move(inv);
    return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    std::vector<Letter> all(a.letters_);
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(std::move(all));
}

Monomial FreeWord::abelianization(std::size_t ngens) const {
    Monomial m(ngens);
    for (const auto& l : letters_) m[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    return m;
}

std::string FreeWord::render() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += " ";
        out += "g" + std::to_string(letters_[i].gen);
        if (letters_[i].exp < 0) out += "^-1";
    }
    return out;
}

namespace {

class WordParser {
public:
    WordParser(std::string_view text, int ngens) : text_(text), ngens_(ngens) {}

    FreeWord parse() {
        FreeWord w = product();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("word '" + std::string(text_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_factor_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == 'g' || c == '[' || c == '1' || c == '(';
    }

    FreeWord product() {
        FreeWord w;
        while (at_factor_start()) w = w * power();
        return w;
    }

    FreeWord power() {
        FreeWord base = factor();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
            long e = std::stol(digits);
            FreeWord unit = e < 0 ? base.inverse() : base;
            FreeWord out;
            for (long k = 0; k < std::labs(e); ++k) out = out * unit;
            return out;
        }
        return base;
    }

    FreeWord factor() {
        char c = text_[pos_];
        if (c == '1') {
            ++pos_;
            return FreeWord();
        }
        if (c == 'g') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("generator without index");
            int g = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (g < 1 || g > ngens_) fail("generator g" + std::to_string(g) + " out of range");
            return FreeWord::generator(g);
        }
        if (c == '(') {
            ++pos_;
            FreeWord inner = product();
            expect(')');
            return inner;
        }
        ++pos_;  // '['
        FreeWord a = product();
        expect(',');
        FreeWord b = product();
        expect(']');
        return FreeWord::commutator(a, b);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view text_;
    int ngens_;
    std::size_t pos_ = 0;
};

} // namespace

FreeWord FreeWord::parse(std::string_view text, int ngens) { return WordParser(text, ngens).parse(); }

Presentation Presentation::parse(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty presentation file");
    std::istringstream head(lines.front());
    std::string keyword;
    int n = 0;
    if (!(head >> keyword >> n) || keyword != "generators" || n <= 0)
        throw ParseError("presentation must start with 'generators <n>', got '" + lines.front() + "'");
    Presentation p{n, {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        FreeWord r = FreeWord::parse(lines[i], n);
        if (r.empty()) throw ParseError("relator " + std::to_string(i) + " reduces to the empty word");
        p.relators.push_back(std::move(r));
    }
    return p;
}

Presentation Presentation::load(const std::string& path) { return parse(read_file(path)); }

Endomorphism Endomorphism::identity(int ngens) {
    Endomorphism e;
    for (int g = 1; g <= ngens; ++g) e.images.push_back(FreeWord::generator(g));
    return e;
}

Endomorphism Endomorphism::inner(const FreeWord& c, int ngens) {
    Endomorphism e;
    for (int g = 1; g <= ngens; ++g) e.images.push_back(c * FreeWord::generator(g) * c.inverse());
    return e;
}

Endomorphism Endomorphism::parse(std::string_view text, int ngens) {
    auto lines = content_lines(text);
    if (lines.size() != static_cast<std::size_t>(ngens))
        throw ParseError("endomorphism needs " + std::to_string(ngens) + " image lines, got " +
                         std::to_string(lines.size()));
    Endomorphism e;
    for (const auto& l : lines) e.images.push_back(FreeWord::parse(l, ngens));
    return e;
}

Endomorphism Endomorphism::load(const std::string& path, int ngens) { return parse(read_file(path), ngens); }

FreeWord Endomorphism::apply(const FreeWord& w) const {
    FreeWord out;
    for (const auto& l : w.letters()) {
        const FreeWord& img = images.at(static_cast<std::size_t>(l.gen - 1));
        out = out * (l.exp > 0 ? img : img.inverse());
    }
    return out;
}

bool Endomorphism::preserves_abelianization() const {
    const std::size_t n = images.size();
    for (std::size_t j = 0; j < n; ++j)
        if (images[j].abelianization(n) != Monomial::unit(n, j)) return false;
    return true;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
    Endomorphism e;
    for (const auto& img : inner.images) e.images.push_back(outer.apply(img));
    return e;
}

namespace {

// Splits "(a, b, c)" groups at top level; commas inside [] belong to the word.
std::vector<std::string> paren_groups(std::string_view line) {
    std::vector<std::string> groups;
    std::size_t depth = 0;
    std::string cur;
    for (char c : line) {
        if (c == '(') {
            if (depth++ > 0) cur += c;
        } else if (c == ')') {
            if (depth == 0) throw ParseError("unbalanced ')' in '" + std::string(line) + "'");
            if (--depth > 0) cur += c;
            else groups.push_back(std::exchange(cur, {}));
        } else if (depth > 0) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError("stray '" + std::string(1, c) + "' in '" + std::string(line) + "'");
        }
    }
    if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(line) + "'");
    return groups;
}

} // namespace

RelatorCertificate RelatorCertificate::parse(std::string_view text, const Presentation& p) {
    const std::size_t m = p.relators.size();
    RelatorCertificate cert;
    cert.terms.resize(m);
    std::vector<bool> seen(m, false);
    for (const auto& line : content_lines(text)) {
        auto colon = line.find(':');
        if (colon == std::string::npos || line[0] != 'r')
            throw ParseError("certificate line must start with 'r<l>:', got '" + line + "'");
        std::size_t l = 0;
        try {
            l = std::stoul(line.substr(1, colon - 1));
        } catch (const std::exception&) {
            throw ParseError("bad relator label in '" + line + "'");
        }
        if (l < 1 || l > m) throw ParseError("relator label r" + std::to_string(l) + " out of range");
        if (seen[l - 1]) throw ParseError("relator r" + std::to_string(l) + " certified twice");
        seen[l - 1] = true;
        for (const auto& group : paren_groups(std::string_view(line).substr(colon + 1))) {
            auto c2 = group.rfind(',');
            auto c1 = c2 == std::string::npos ? std::string::npos : group.rfind(',', c2 - 1);
            if (c1 == std::string::npos) throw ParseError("certificate term '(" + group + ")' needs three fields");
            FreeWord w = FreeWord::parse(group.substr(0, c1), p.ngens);
            long k = 0;
            try {
                k = std::stol(group.substr(c1 + 1, c2 - c1 - 1));
            } catch (const std::exception&) {
                throw ParseError("bad relator index in '(" + group + ")'");
            }
            std::string s = group.substr(c2 + 1);
            s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                    s.end());
            if (s != "+1" && s != "1" && s != "-1") throw ParseError("sign must be +1 or -1 in '(" + group + ")'");
            if (k < 1 || static_cast<std::size_t>(k) > m)
                throw ParseError("relator index " + std::to_string(k) + " out of range");
            cert.terms[l - 1].push_back(CertificateTerm{w, static_cast<std::size_t>(k - 1), s == "-1" ? -1 : 1});
        }
    }
    for (std::size_t l = 0; l < m; ++l)
        if (!seen[l]) throw ParseError("certificate has no line for r" + std::to_string(l + 1));
    return cert;
}

RelatorCertificate RelatorCertificate::load(const std::string& path, const Presentation& p) {
    return parse(read_file(path), p);
}

RelatorCertificate RelatorCertificate::trivial(const Presentation& p) {
    return inner(FreeWord(), p);
}

RelatorCertificate RelatorCertificate::inner(const FreeWord& c, const Presentation& p) {
    RelatorCertificate cert;
    for (std::size_t l = 0; l < p.relators.size(); ++l) cert.terms.push_back({CertificateTerm{c, l, 1}});
    return cert;
}

void RelatorCertificate::validate(const Presentation& p, const Endomorphism& phi) const {
    if (terms.size() != p.relators.size())
        throw CertificateInvalid("certificate covers " + std::to_string(terms.size()) + " relators, presentation has " +
                                 std::to_string(p.relators.size()));
    for (std::size_t l = 0; l < terms.size(); ++l) {
        FreeWord product;
        for (const auto& t : terms[l]) {
            if (t.target >= p.relators.size() || (t.sign != 1 && t.sign != -1))
                throw CertificateInvalid("malformed term for r" + std::to_string(l + 1));
            const FreeWord& r = p.relators[t.target];
            product = product * t.conjugator * (t.sign > 0 ? r : r.inverse()) * t.conjugator.inverse();
        }
        FreeWord expected = phi.apply(p.relators[l]);
        if (!(product == expected))
            throw CertificateInvalid("r" + std::to_string(l + 1) + ": product reduces to '" + product.render() +
                                     "' but the image is '" + expected.render() + "'");
    }
}

std::string RelatorCertificate::render() const {
    std::string out;
    for (std::size_t l = 0; l < terms.size(); ++l) {
        out += "r" + std::to_string(l + 1) + ":";
        for (const auto& t : terms[l])
            out += " (" + t.conjugator.render() + ", " + std::to_string(t.target + 1) + ", " +
                   (t.sign > 0 ? "+1" : "-1") + ")";
        out += "\n";
    }
    return out;
}

RelatorCertificate compose(const RelatorCertificate& outer_cert, const Endomorphism& outer,
                           const RelatorCertificate& inner_cert) {
    // outer(v r_k^d v^-1) = outer(v) outer(r_k)^d outer(v)^-1, and outer(r_k)
    // expands through outer_cert; d = -1 reverses that expansion.
    RelatorCertificate cert;
    for (const auto& row : inner_cert.terms) {
        std::vector<CertificateTerm> out;
        for (const auto& t : row) {
            FreeWord v = outer.apply(t.conjugator);
            const auto& expansion = outer_cert.terms.at(t.target);
            auto emit = [&](const CertificateTerm& e) {
                out.push_back(CertificateTerm{v * e.conjugator, e.target, e.sign * t.sign});
            };
            if (t.sign > 0)
                std::for_each(expansion.begin(), expansion.end(), emit);
            else
                std::for_each(expansion.rbegin(), expansion.rend(), emit);
        }
        cert.terms.push_back(std::move(out));
    }
    return cert;
}

} // namespace arrmono

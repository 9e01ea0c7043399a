#pragma once

#include "arrmono/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arrmono {

struct Letter {
    int gen;  // 1-based generator index
    int exp;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

// Freely reduced word in the free group on n generators.
class FreeWord {
public:
    FreeWord() = default;
    // Reduces the given letters.
    explicit FreeWord(std::vector<Letter> letters);

    static FreeWord generator(int gen, int exp = 1) { return FreeWord({Letter{gen, exp}}); }
    // [a,b] = a b a^-1 b^-1
    static FreeWord commutator(const FreeWord& a, const FreeWord& b);

    // Syntax: "g1 g2^-1 g3^2", "[g3 g1, g2]", "1" for the empty word.
    static FreeWord parse(std::string_view text, int ngens);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

    // Exponent sums, i.e. the image in the abelianization Z^n.
    Monomial abelianization(std::size_t ngens) const;

    std::string render() const;
    bool operator==(const FreeWord&) const = default;

private:
    std::vector<Letter> letters_;
};

struct Presentation {
    int ngens = 0;
    std::vector<FreeWord> relators;

    // "generators n" then one relator per line; throws ParseError on empty
    // relators or generator indices out of range.
    static Presentation parse(std::string_view text);
    static Presentation load(const std::string& path);
};

// Group endomorphism of the free group, given by generator images.
struct Endomorphism {
    std::vector<FreeWord> images;

    static Endomorphism identity(int ngens);
    // g -> c g c^-1
    static Endomorphism inner(const FreeWord& c, int ngens);
    // One image word per line.
    static Endomorphism parse(std::string_view text, int ngens);
    static Endomorphism load(const std::string& path, int ngens);

    int ngens() const { return static_cast<int>(images.size()); }
    FreeWord apply(const FreeWord& w) const;
    bool preserves_abelianization() const;
};

// x -> outer(inner(x))
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);
// x -> second(first(x)); the order in which loops are traversed.
inline Endomorphism then(const Endomorphism& first, const Endomorphism& second) { return compose(second, first); }

struct CertificateTerm {
    FreeWord conjugator;
    std::size_t target;  // 0-based relator index
    int sign;            // +1 or -1
    bool operator==(const CertificateTerm&) const = default;
};

// terms[l] expresses phi(r_l) as the product over its entries of
// conjugator * r_target^sign * conjugator^-1, left to right.
struct RelatorCertificate {
    std::vector<std::vector<CertificateTerm>> terms;

    // Lines "r<l>: (word, k, +1) (word, k, -1) ...", k 1-based.
    static RelatorCertificate parse(std::string_view text, const Presentation& p);
    static RelatorCertificate load(const std::string& path, const Presentation& p);

    // r_l -> r_l
    static RelatorCertificate trivial(const Presentation& p);
    // Certificate for Endomorphism::inner(c).
    static RelatorCertificate inner(const FreeWord& c, const Presentation& p);

    // Throws CertificateInvalid naming the first relator whose product does not
    // reduce to phi(r_l).
    void validate(const Presentation& p, const Endomorphism& phi) const;

    std::string render() const;
};

// Certificate for compose(outer, inner) built from the factors' certificates.
RelatorCertificate compose(const RelatorCertificate& outer_cert, const Endomorphism& outer,
                           const RelatorCertificate& inner_cert);

} // namespace arrmono

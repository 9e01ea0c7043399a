#include "arrmono/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace arrmono {

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

bool Monomial::divides(const Monomial& other) const {
    assert(size() == other.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial& Monomial::operator+=(const Monomial& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
    return *this;
}

Monomial& Monomial::operator-=(const Monomial& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= o.exps_[i];
    return *this;
}

Monomial Monomial::operator-() const {
    Monomial r(*this);
    for (auto& e : r.exps_) e = -e;
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    // Larger leading exponent sorts first.
    for (std::size_t i = 0; i < std::min(exps_.size(), o.exps_.size()); ++i)
        if (exps_[i] != o.exps_[i]) return o.exps_[i] <=> exps_[i];
    return exps_.size() <=> o.exps_.size();
}

Monomial min_exponents(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

std::string render_monomial(const Monomial& m, char var) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += var;
        out += std::to_string(i + 1);
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string serialize_monomial(const Monomial& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[i]);
    }
    return out + "]";
}

} // namespace arrmono

#include "arrmono/series.hpp"

namespace arrmono {

TruncatedSeries::TruncatedSeries(std::size_t nvars, int cap) : nvars_(nvars), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("negative truncation cap");
    parts_.assign(static_cast<std::size_t>(cap) + 1, MultiPoly(nvars));
}

TruncatedSeries::TruncatedSeries(const MultiPoly& p, int cap) : TruncatedSeries(p.nvars(), cap) {
    for (const auto& [m, c] : p.terms()) {
        int d = m.degree();
        if (d <= cap) parts_[static_cast<std::size_t>(d)].add_term(m, c);
    }
}

bool TruncatedSeries::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

MultiPoly TruncatedSeries::total() const {
    MultiPoly sum(nvars_);
    for (const auto& p : parts_) sum += p;
    return sum;
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_ || cap_ != o.cap_)
        throw ShapeMismatch("truncated series over different rings or caps");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t d = 0; d < parts_.size(); ++d) parts_[d] += o.parts_[d];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t d = 0; d < parts_.size(); ++d) parts_[d] -= o.parts_[d];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& p : parts_) p *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries r(a.nvars_, a.cap_);
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
        if (a.parts_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.parts_.size(); ++j)
            if (!b.parts_[j].is_zero()) r.parts_[i + j] += a.parts_[i] * b.parts_[j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& p : r.parts_) p = -p;
    return r;
}

std::string TruncatedSeries::render(char var) const {
    std::string out;
    for (std::size_t d = 0; d < parts_.size(); ++d) {
        if (parts_[d].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + parts_[d].render(var) + ")";
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries exp_substitute(const LaurentPoly& p, int cap) {
    const std::size_t n = p.nvars();
    TruncatedSeries result(n, cap);
    for (const auto& [m, c] : p.terms()) {
        // exp(L) with L = sum_j m_j y_j, expanded homogeneously.
        MultiPoly linear(n);
        for (std::size_t j = 0; j < n; ++j)
            if (m[j] != 0) linear.add_term(Monomial::unit(n, j), Rational(m[j]));
        TruncatedSeries term(n, cap);
        MultiPoly power = MultiPoly::constant(n, c);
        for (int k = 0; k <= cap; ++k) {
            TruncatedSeries piece(power, cap);
            term += piece;
            power = power * linear * Rational(1, k + 1);
        }
        result += term;
    }
    return result;
}

} // namespace arrmono

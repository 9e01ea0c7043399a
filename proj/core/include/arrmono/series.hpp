#pragma once

#include "arrmono/poly.hpp"

#include <vector>

namespace arrmono {

// Power series in y_1..y_n truncated beyond total degree `cap`, stored as one
// homogeneous MultiPoly per degree 0..cap.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::size_t nvars, int cap);
    // Splits p by degree and drops everything above cap.
    TruncatedSeries(const MultiPoly& p, int cap);

    std::size_t nvars() const noexcept { return nvars_; }
    int cap() const noexcept { return cap_; }
    const MultiPoly& part(int degree) const { return parts_.at(static_cast<std::size_t>(degree)); }
    const std::vector<MultiPoly>& parts() const noexcept { return parts_; }
    bool is_zero() const;
    // Sum of all parts.
    MultiPoly total() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    bool operator==(const TruncatedSeries& o) const = default;

    std::string render(char var) const;

private:
    void check(const TruncatedSeries& o) const;

    std::size_t nvars_ = 0;
    int cap_ = 0;
    std::vector<MultiPoly> parts_;
};

inline constexpr int kDefaultSeriesCap = 2;

// p(exp(y)) truncated beyond degree cap; x_j^m becomes exp(m*y_j).
TruncatedSeries exp_substitute(const LaurentPoly& p, int cap = kDefaultSeriesCap);

} // namespace arrmono

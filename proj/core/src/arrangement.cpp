#include "arrmono/arrangement.hpp"

#include "arrmono/elimination.hpp"
#include "arrmono/text.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace arrmono {

std::string render_index_set(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

namespace {

Matrix<Rational> normals_of(const Arrangement& a, const IndexSet& s, bool augmented) {
    Matrix<Rational> m(s.size(), a.dim() + (augmented ? 1 : 0), Rational(0));
    for (std::size_t r = 0; r < s.size(); ++r) {
        const auto& h = a[static_cast<std::size_t>(s[r] - 1)];
        for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = h.normal[c];
        if (augmented) m(r, a.dim()) = -h.offset;
    }
    return m;
}

// Calls f on every k-subset of {1..n} in lexicographic order.
void for_each_subset(int n, std::size_t k, const std::function<void(const IndexSet&)>& f) {
    IndexSet s(k);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int start) {
        if (pos == k) {
            f(s);
            return;
        }
        for (int v = start; v <= n; ++v) {
            s[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
}

} // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
    if (dim_ == 0) throw InvalidArrangement("ambient dimension must be positive");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        const auto& n = hyperplanes_[i].normal;
        if (n.size() != dim_)
            throw InvalidArrangement("hyperplane " + std::to_string(i + 1) + " has " + std::to_string(n.size()) +
                                     " coefficients, expected " + std::to_string(dim_));
        if (std::all_of(n.begin(), n.end(), [](const Rational& r) { return r == 0; }))
            throw InvalidArrangement("hyperplane " + std::to_string(i + 1) + " has zero normal");
    }
    IndexSet all(hyperplanes_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i + 1);
    if (rank_of(all) != dim_)
        throw InvalidArrangement("normals span a space of dimension " + std::to_string(rank_of(all)) +
                                 ", expected " + std::to_string(dim_));
}

Arrangement Arrangement::parse(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty arrangement file");
    std::istringstream head(lines.front());
    std::string keyword;
    long dim = 0;
    if (!(head >> keyword >> dim) || keyword != "dim" || dim <= 0)
        throw ParseError("arrangement must start with 'dim <l>', got '" + lines.front() + "'");
    std::vector<Hyperplane> hs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::vector<Rational> vals;
        std::string tok;
        while (in >> tok) vals.push_back(parse_rational(tok));
        if (vals.size() != static_cast<std::size_t>(dim) + 1)
            throw ParseError("hyperplane line '" + lines[i] + "' needs " + std::to_string(dim + 1) + " numbers");
        hs.push_back(Hyperplane{vals.front(), std::vector<Rational>(vals.begin() + 1, vals.end())});
    }
    return Arrangement(static_cast<std::size_t>(dim), std::move(hs));
}

Arrangement Arrangement::load(const std::string& path) { return parse(read_file(path)); }

std::size_t Arrangement::rank_of(const IndexSet& s) const {
    if (s.empty()) return 0;
    return rank(normals_of(*this, s, false));
}

bool Arrangement::is_dependent(const IndexSet& s) const { return rank_of(s) < s.size(); }

bool Arrangement::has_nonempty_intersection(const IndexSet& s) const {
    if (s.empty()) return true;
    return rank(normals_of(*this, s, true)) == rank_of(s);
}

std::string Arrangement::serialize() const {
    std::string out = "dim " + std::to_string(dim_) + "\n";
    for (const auto& h : hyperplanes_) {
        out += to_string(h.offset);
        for (const auto& a : h.normal) out += " " + to_string(a);
        out += "\n";
    }
    return out;
}

bool contains_subset(const IndexSet& s, const IndexSet& sub) {
    return std::includes(s.begin(), s.end(), sub.begin(), sub.end());
}

DependencyData compute_dependencies(const Arrangement& a) {
    DependencyData d;
    const int n = static_cast<int>(a.size());
    // Increasing size makes the containment test a minimality test.
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        for_each_subset(n, k, [&](const IndexSet& s) {
            auto contains_any = [&](const std::vector<IndexSet>& family) {
                return std::any_of(family.begin(), family.end(),
                                   [&](const IndexSet& c) { return contains_subset(s, c); });
            };
            if (contains_any(d.empty_min)) return;
            if (!a.has_nonempty_intersection(s)) {
                d.empty_min.push_back(s);
                return;
            }
            if (contains_any(d.circuits)) return;
            if (a.is_dependent(s)) d.circuits.push_back(s);
        });
    }
    for (const auto& c : d.circuits) d.broken_circuits.emplace_back(c.begin() + 1, c.end());
    std::sort(d.broken_circuits.begin(), d.broken_circuits.end());
    d.broken_circuits.erase(std::unique(d.broken_circuits.begin(), d.broken_circuits.end()),
                            d.broken_circuits.end());
    return d;
}

std::vector<std::size_t> NbcBasis::betti() const {
    std::vector<std::size_t> b;
    for (const auto& level : sets) b.push_back(level.size());
    return b;
}

long NbcBasis::index_of(const IndexSet& s) const {
    if (s.size() >= sets.size()) return -1;
    const auto& level = sets[s.size()];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return it - level.begin();
}

NbcBasis nbc_basis(const Arrangement& a, const DependencyData& deps) {
    NbcBasis b;
    b.sets.push_back({IndexSet{}});
    for (std::size_t q = 1; q <= a.dim(); ++q) {
        std::vector<IndexSet> level;
        for_each_subset(static_cast<int>(a.size()), q, [&](const IndexSet& s) {
            for (const auto& bc : deps.broken_circuits)
                if (contains_subset(s, bc)) return;
            for (const auto& e : deps.empty_min)
                if (contains_subset(s, e)) return;
            level.push_back(s);
        });
        b.sets.push_back(std::move(level));
    }
    return b;
}

NbcBasis nbc_basis(const Arrangement& a) { return nbc_basis(a, compute_dependencies(a)); }

} // namespace arrmono

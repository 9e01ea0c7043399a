#include "arrmono/connection.hpp"

#include "arrmono/text.hpp"

#include <sstream>

namespace arrmono {

namespace {

bool identity_at_one(const Matrix<LaurentPoly>& m) {
    std::vector<Rational> ones(m.nvars(), Rational(1));
    return evaluate(m, std::span<const Rational>(ones)) == Matrix<Rational>::identity(m.rows(), Rational(0));
}

template <class T>
std::optional<EntryMismatch> first_mismatch(const Matrix<T>& a, const Matrix<T>& b, char var) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return EntryMismatch{i, j, a(i, j).render(var), b(i, j).render(var)};
    return std::nullopt;
}

Matrix<TruncatedSeries> degree_part(const Matrix<TruncatedSeries>& m, int degree) {
    const int cap = m.zero().cap();
    return map_entries(m, m.zero(), [&](const TruncatedSeries& s) { return TruncatedSeries(s.part(degree), cap); });
}

} // namespace

FormalConnection formal_connection(const std::vector<Matrix<LaurentPoly>>& phi) {
    FormalConnection fc;
    for (std::size_t q = 0; q < phi.size(); ++q) {
        if (!identity_at_one(phi[q]))
            throw NotIdentityAtOne("Phi^" + std::to_string(q) + "(1) is not the identity");
        auto omega = linear_part(phi[q]);
        for (std::size_t i = 0; i < omega.rows(); ++i)
            for (std::size_t j = 0; j < omega.cols(); ++j)
                if (!omega(i, j).is_integral_linear_form())
                    throw VerificationFailed("Omega^" + std::to_string(q) + " entry (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ") is not an integral linear form");
        fc.omega.push_back(std::move(omega));
    }
    return fc;
}

ExpRelationReport verify_exp_relation(const Matrix<LaurentPoly>& phi, const Matrix<MultiPoly>& omega, int cap) {
    if (phi.rows() != omega.rows() || phi.cols() != omega.cols())
        throw ShapeMismatch("Phi is " + phi.shape() + ", Omega is " + omega.shape());
    ExpRelationReport r;
    r.cap = cap;
    auto lhs = exp_substitute(phi, cap);
    auto rhs = mat_exp_truncated(omega, cap);
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (!(lhs(i, j) == rhs(i, j)))
                r.mismatches.push_back(EntryMismatch{i, j, lhs(i, j).render('y'), rhs(i, j).render('y')});
    r.entrywise = r.mismatches.empty();
    r.spectral = char_poly(lhs) == char_poly(rhs);
    return r;
}

std::optional<EntryMismatch> check_degree_two_identity(const Matrix<LaurentPoly>& delta,
                                                       const Matrix<LaurentPoly>& phi_q,
                                                       const Matrix<LaurentPoly>& phi_next) {
    auto d = exp_substitute(delta, 2);
    auto p = exp_substitute(phi_q, 2);
    auto pn = exp_substitute(phi_next, 2);
    auto lhs = degree_part(degree_part(d, 0) * degree_part(pn, 2) + degree_part(d, 1) * degree_part(pn, 1) +
                               degree_part(d, 2) * degree_part(pn, 0),
                           2);
    auto rhs = degree_part(degree_part(p, 0) * degree_part(d, 2) + degree_part(p, 1) * degree_part(d, 1) +
                               degree_part(p, 2) * degree_part(d, 0),
                           2);
    return first_mismatch(lhs, rhs, 'y');
}

std::optional<EntryMismatch> check_chain_map(const Matrix<MultiPoly>& mu, const Matrix<MultiPoly>& current,
                                             const Matrix<MultiPoly>& next) {
    return first_mismatch(mu * next, current * mu, 'y');
}

bool MonomialSubstitution::is_identity() const {
    for (const auto& i : image)
        if (i) return false;
    return true;
}

LaurentPoly MonomialSubstitution::apply(const LaurentPoly& p) const {
    if (is_identity()) return p;
    LaurentPoly out(nvars);
    for (const auto& [m, c] : p.terms()) {
        Monomial target(nvars);
        for (std::size_t k = 0; k < nvars; ++k) {
            if (!m[k]) continue;
            Monomial img = image[k] ? *image[k] : Monomial::unit(nvars, k);
            for (std::size_t j = 0; j < nvars; ++j) target[j] += m[k] * img[j];
        }
        out.add_term(target, c);
    }
    return out;
}

MultiPoly MonomialSubstitution::apply(const MultiPoly& p) const {
    if (is_identity()) return p;
    std::vector<MultiPoly> forms;
    for (std::size_t k = 0; k < nvars; ++k) {
        if (!image[k]) {
            forms.push_back(MultiPoly::variable(nvars, k));
            continue;
        }
        MultiPoly f(nvars);
        for (std::size_t j = 0; j < nvars; ++j)
            if ((*image[k])[j]) f.add_term(Monomial::unit(nvars, j), Rational((*image[k])[j]));
        forms.push_back(std::move(f));
    }
    MultiPoly out(nvars);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(nvars, c);
        for (std::size_t k = 0; k < nvars; ++k)
            for (int e = 0; e < m[k]; ++e) t = t * forms[k];
        out = out + t;
    }
    return out;
}

std::vector<Rational> MonomialSubstitution::restrict_point(std::span<const Rational> t) const {
    std::vector<Rational> out(t.begin(), t.end());
    // Images only mention free coordinates, so one pass suffices.
    for (std::size_t k = 0; k < nvars; ++k)
        if (image[k]) out[k] = LaurentPoly::term(*image[k], Rational(1)).evaluate(t);
    return out;
}

std::string MonomialSubstitution::render() const {
    std::string out;
    for (std::size_t k = 0; k < nvars; ++k) {
        if (!image[k]) continue;
        if (!out.empty()) out += ", ";
        out += "x" + std::to_string(k + 1) + " = " + render_monomial(*image[k], 'x');
    }
    return out.empty() ? "all of the torus" : out;
}

ProjectionData ProjectionData::parse(std::string_view text, std::size_t nvars) {
    MonomialSubstitution sub{nvars, std::vector<std::optional<Monomial>>(nvars)};
    std::string rows;
    for (const auto& line : content_lines(text)) {
        if (line.rfind("on ", 0) != 0) {
            rows += line + "\n";
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("component line needs '=': '" + line + "'");
        LaurentPoly lhs = parse_laurent(line.substr(3, eq - 3), nvars);
        LaurentPoly rhs = parse_laurent(line.substr(eq + 1), nvars);
        if (lhs.size() != 1 || rhs.size() != 1 || lhs.leading_coefficient() != 1 || rhs.leading_coefficient() != 1)
            throw ParseError("component line must equate a variable with a monomial: '" + line + "'");
        const Monomial& var = lhs.terms().begin()->first;
        const Monomial& img = rhs.terms().begin()->first;
        std::size_t k = nvars;
        for (std::size_t j = 0; j < nvars; ++j)
            if (var == Monomial::unit(nvars, j)) k = j;
        if (k == nvars) throw ParseError("left side of '" + line + "' is not a single variable");
        if (img[k] != 0) throw ParseError("variable appears on both sides of '" + line + "'");
        if (sub.image[k]) throw ParseError("variable x" + std::to_string(k + 1) + " restricted twice");
        sub.image[k] = img;
    }
    for (std::size_t k = 0; k < nvars; ++k)
        for (std::size_t j = 0; j < nvars; ++j)
            if (sub.image[k] && (*sub.image[k])[j] != 0 && sub.image[j])
                throw ParseError("component images must only use unrestricted variables");
    auto xi = parse_laurent_matrix(rows, nvars);
    return ProjectionData{xi, linear_part(xi), std::move(sub)};
}

ProjectionData ProjectionData::load(const std::string& path, std::size_t nvars) {
    return parse(read_file(path), nvars);
}

void verify_projection(const ProjectionData& proj, const Matrix<LaurentPoly>& delta1, const Matrix<MultiPoly>& mu1) {
    if (auto bad = first_mismatch(proj.component.apply(delta1 * proj.xi),
                                  Matrix<LaurentPoly>(delta1.rows(), proj.xi.cols(), proj.xi.zero()), 'x'))
        throw VerificationFailed("Delta^1 * Xi is nonzero on " + proj.component.render() + " at entry (" +
                                 std::to_string(bad->row + 1) + "," + std::to_string(bad->col + 1) + "): " + bad->lhs);
    if (auto bad = first_mismatch(proj.component.apply(mu1 * proj.upsilon),
                                  Matrix<MultiPoly>(mu1.rows(), proj.upsilon.cols(), proj.upsilon.zero()), 'y'))
        throw VerificationFailed("mu^1 * Upsilon is nonzero on " + proj.component.render() + " at entry (" +
                                 std::to_string(bad->row + 1) + "," + std::to_string(bad->col + 1) + "): " + bad->lhs);
    if (!(proj.upsilon == linear_part(proj.xi))) throw VerificationFailed("Upsilon is not the linear part of Xi");
    std::size_t r = generic_rank(proj.component.apply(proj.xi));
    if (r != proj.xi.cols())
        throw VerificationFailed("Xi has rank " + std::to_string(r) + " on " + proj.component.render() +
                                 ", expected " + std::to_string(proj.xi.cols()));
}

namespace {

template <class T>
Matrix<T> induced_map_impl(const Matrix<T>& proj, const Matrix<T>& map, char var) {
    if (map.cols() != proj.rows()) throw ShapeMismatch("map " + map.shape() + " against projection " + proj.shape());
    auto res = solve_right(proj, map * proj);
    if (res.kernel_dimension() > 0)
        throw VerificationFailed("projection has a " + std::to_string(res.kernel_dimension()) +
                                 "-dimensional kernel, the induced map is not unique");
    if (!res.in_ring) throw NotInRing("induced map has denominator " + res.denominator.render(var));
    return *res.solution;
}

} // namespace

Matrix<LaurentPoly> induced_map(const Matrix<LaurentPoly>& xi, const Matrix<LaurentPoly>& phi) {
    return induced_map_impl(xi, phi, 'x');
}

Matrix<MultiPoly> induced_map(const Matrix<MultiPoly>& upsilon, const Matrix<MultiPoly>& omega) {
    return induced_map_impl(upsilon, omega, 'y');
}

std::vector<Matrix<Rational>> cohomology_action(const RingComplex<Rational>& complex,
                                                const std::vector<Matrix<Rational>>& maps) {
    complex.verify();
    const std::size_t top = complex.top_degree();
    if (maps.size() != top + 1)
        throw ShapeMismatch("need " + std::to_string(top + 1) + " maps, got " + std::to_string(maps.size()));
    for (std::size_t q = 0; q < complex.boundaries.size(); ++q) {
        const auto& d = complex.boundaries[q];
        auto lhs = d * maps[q + 1];
        auto rhs = maps[q] * d;
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                if (lhs(i, j) != rhs(i, j))
                    throw ChainIdentityFailed(q, i, j, to_string(lhs(i, j)) + " vs " + to_string(rhs(i, j)));
    }
    std::vector<Matrix<Rational>> psi;
    for (std::size_t q = 0; q <= top; ++q) {
        const std::size_t dim = complex.ranks[q];
        Matrix<Rational> cycles = q < complex.boundaries.size() ? left_kernel(complex.boundaries[q])
                                                                : Matrix<Rational>::identity(dim, Rational(0));
        Matrix<Rational> basis = q > 0 ? independent_rows(complex.boundaries[q - 1]) : Matrix<Rational>(0, dim, Rational(0));
        const std::size_t boundary_rank = basis.rows();
        // Extend a basis of the boundaries by cycles; the added rows span H^q.
        for (std::size_t i = 0; i < cycles.rows(); ++i) {
            auto candidate = stack_rows(basis, cycles.block(i, 0, 1, dim));
            if (rank(candidate) == candidate.rows()) basis = std::move(candidate);
        }
        const std::size_t h = basis.rows() - boundary_rank;
        Matrix<Rational> reps = basis.block(boundary_rank, 0, h, dim);
        // Coordinates c with reps * Phi = c * basis.
        auto sol = solve_right(basis.transposed(), (reps * maps[q]).transposed());
        Matrix<Rational> coords = sol.solution->transposed();
        psi.push_back(coords.block(0, boundary_rank, h, h));
    }
    return psi;
}

WeightClassification classify_weights(const RingComplex<Rational>& specialized) {
    WeightClassification w;
    w.betti = specialized.ranks;
    w.cohomology = cohomology_betti(specialized);
    for (std::size_t q = 0; q < w.betti.size(); ++q)
        w.euler_characteristic += (q % 2 ? -1 : 1) * static_cast<long>(w.betti[q]);
    w.non_resonant = true;
    for (std::size_t q = 0; q + 1 < w.cohomology.size(); ++q)
        if (w.cohomology[q] != 0) w.non_resonant = false;
    w.top_matches_euler = !w.cohomology.empty() &&
                          static_cast<long>(w.cohomology.back()) == std::labs(w.euler_characteristic);
    return w;
}

} // namespace arrmono

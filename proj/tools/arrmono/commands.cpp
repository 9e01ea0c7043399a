#include "arrmono/commands.hpp"

#include "arrmono/connection.hpp"
#include "arrmono/fox.hpp"
#include "arrmono/os_complex.hpp"

#include <functional>
#include <stdexcept>

namespace arrmono::cli {

namespace {

std::string require(const std::string& path, const char* flag) {
    if (path.empty()) throw ParseError(std::string("missing required option ") + flag);
    return path;
}

std::vector<Rational> require_point(const JobSpec& job, std::size_t n) {
    if (!job.at) throw ParseError("missing required option --at");
    if (job.at->size() != n)
        throw ParseError("--at has " + std::to_string(job.at->size()) + " coordinates, expected " + std::to_string(n));
    return *job.at;
}

std::string label_list(const std::vector<IndexSet>& sets) {
    std::string out;
    for (const auto& s : sets) out += (out.empty() ? "" : " ") + render_index_set(s);
    return out;
}

std::string first_entry(const std::optional<EntryMismatch>& m) {
    if (!m) return {};
    return "entry (" + std::to_string(m->row + 1) + "," + std::to_string(m->col + 1) + "): " + m->lhs + " vs " + m->rhs;
}

// Runs a check, turning library errors into a failed verdict.
void check(Report& r, const std::string& name, const std::function<std::string()>& body, bool informational = false) {
    std::string detail;
    bool ok = true;
    try {
        detail = body();
        ok = detail.empty();
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    if (informational)
        r.info_verdict(name, ok, detail);
    else
        r.verdict(name, ok, detail);
}

struct Monodromy {
    Presentation presentation;
    RingComplex<LaurentPoly> universal;
    Endomorphism endomorphism;
    RelatorCertificate certificate;
    UniversalRepresentation rep;
};

Monodromy load_monodromy(const JobSpec& job) {
    auto p = Presentation::load(require(job.presentation, "--presentation"));
    auto k = universal_complex(p);
    auto phi = Endomorphism::load(require(job.endomorphism, "--endomorphism"), p.ngens);
    auto cert = RelatorCertificate::load(require(job.certificate, "--certificate"), p);
    auto rep = universal_representation(p, phi, cert);
    return {std::move(p), std::move(k), std::move(phi), std::move(cert), std::move(rep)};
}

std::size_t cmd_info(const JobSpec& job, Report& r) {
    auto a = Arrangement::load(require(job.arrangement, "--arrangement"));
    auto deps = compute_dependencies(a);
    auto basis = nbc_basis(a, deps);
    r.section("arrangement");
    r.field("dim", std::to_string(a.dim()));
    r.field("hyperplanes", std::to_string(a.size()));
    r.sets("circuits", deps.circuits);
    r.sets("empty_min", deps.empty_min);
    r.sets("broken_circuits", deps.broken_circuits);
    for (std::size_t q = 0; q < basis.sets.size(); ++q) r.field("nbc " + std::to_string(q), label_list(basis.sets[q]));
    r.numbers("betti", basis.betti());
    long euler = 0;
    for (std::size_t q = 0; q < basis.sets.size(); ++q)
        euler += (q % 2 ? -1 : 1) * static_cast<long>(basis.sets[q].size());
    r.field("euler", std::to_string(euler));
    return 0;
}

std::size_t cmd_aomoto(const JobSpec& job, Report& r) {
    auto a = Arrangement::load(require(job.arrangement, "--arrangement"));
    auto ac = aomoto_complex(a);
    r.section("aomoto");
    for (std::size_t q = 0; q < ac.basis.sets.size(); ++q) r.field("basis " + std::to_string(q), label_list(ac.basis.sets[q]));
    for (std::size_t q = 0; q < ac.complex.boundaries.size(); ++q)
        r.matrix("mu" + std::to_string(q), ac.complex.boundaries[q], 'y');
    check(r, "mu*mu=0", [&] {
        ac.complex.verify();
        return std::string();
    });
    check(r, "mu entries are integral linear forms", [&] {
        for (std::size_t q = 0; q < ac.complex.boundaries.size(); ++q) {
            const auto& m = ac.complex.boundaries[q];
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!m(i, j).is_integral_linear_form())
                        return "mu" + std::to_string(q) + " entry (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")";
        }
        return std::string();
    });
    return r.failures();
}

std::size_t cmd_fox(const JobSpec& job, Report& r) {
    auto p = Presentation::load(require(job.presentation, "--presentation"));
    auto k = universal_complex(p);
    r.section("universal complex");
    r.numbers("ranks", k.ranks);
    for (std::size_t q = 0; q < k.boundaries.size(); ++q) r.matrix("Delta" + std::to_string(q), k.boundaries[q], 'x');
    r.verdict("Delta0*Delta1=0", true);
    if (!job.arrangement.empty()) {
        auto ac = aomoto_complex(Arrangement::load(job.arrangement));
        for (std::size_t q = 0; q < k.boundaries.size() && q < ac.complex.boundaries.size(); ++q) {
            bool same = linear_part(k.boundaries[q]) == ac.complex.boundaries[q];
            // Equality depends on matching bases; chain equivalence is not certified.
            r.info_verdict("linear_part(Delta" + std::to_string(q) + ")=mu" + std::to_string(q), same);
        }
    }
    return r.failures();
}

std::size_t cmd_monodromy(const JobSpec& job, Report& r) {
    auto p = Presentation::load(require(job.presentation, "--presentation"));
    auto k = universal_complex(p);
    auto phi = Endomorphism::load(require(job.endomorphism, "--endomorphism"), p.ngens);
    r.section("monodromy");
    auto f1 = phi1(phi);
    r.matrix("Phi0", Matrix<LaurentPoly>::identity(1, LaurentPoly(static_cast<std::size_t>(p.ngens))), 'x');
    r.matrix("Phi1", f1, 'x');
    check(r, "Delta0*Phi1=Phi0*Delta0", [&] {
        verify_chain_map(k.boundaries[0], Matrix<LaurentPoly>::identity(1, f1.zero()), f1, 0);
        return std::string();
    });
    if (job.certificate.empty()) {
        auto fb = phi2_solve_fallback(k.boundaries[1], f1);
        r.note("no certificate given: Phi2 below is one NON-CANONICAL solution of Delta1*X = Phi1*Delta1");
        r.matrix("Phi2_numerator", fb.solution.numerator, 'x');
        r.field("Phi2_denominator", fb.solution.denominator.render('x'));
        r.field("Phi2_in_ring", fb.solution.in_ring ? "yes" : "no");
        r.field("kernel_dimension", std::to_string(fb.solution.kernel_dimension()));
        for (std::size_t i = 0; i < fb.solution.kernel.size(); ++i)
            r.matrix("kernel" + std::to_string(i + 1), fb.solution.kernel[i], 'x');
        return r.failures();
    }
    auto cert = RelatorCertificate::load(job.certificate, p);
    auto f2 = phi2_from_certificate(p, phi, cert);
    r.verdict("certificate reduces to phi(r_l)", true);
    r.matrix("Phi2", f2, 'x');
    r.verdict("Delta1*Phi2=Phi1*Delta1", true);
    std::vector<Rational> ones(static_cast<std::size_t>(p.ngens), Rational(1));
    r.verdict("Phi1(1)=I", evaluate(f1, std::span<const Rational>(ones)) == Matrix<Rational>::identity(f1.rows(), Rational(0)));
    r.verdict("Phi2(1)=I", evaluate(f2, std::span<const Rational>(ones)) == Matrix<Rational>::identity(f2.rows(), Rational(0)));
    if (job.at) {
        auto t = require_point(job, static_cast<std::size_t>(p.ngens));
        r.matrix("Phi1(t)", evaluate(f1, std::span<const Rational>(t)));
        r.matrix("Phi2(t)", evaluate(f2, std::span<const Rational>(t)));
    }
    return r.failures();
}

std::size_t cmd_connection(const JobSpec& job, Report& r) {
    auto m = load_monodromy(job);
    auto fc = formal_connection(m.rep.phi);
    r.section("formal connection");
    std::optional<AomotoComplex> ac;
    if (!job.arrangement.empty()) ac = aomoto_complex(Arrangement::load(job.arrangement));
    for (std::size_t q = 0; q < fc.omega.size(); ++q) {
        const std::string s = std::to_string(q);
        r.matrix("Omega" + s, fc.omega[q], 'y');
        auto mono = eigen_monomials(m.rep.phi[q]);
        auto lin = eigen_linear_forms(fc.omega[q], job.seed);
        r.eigen("Phi" + s, mono);
        r.eigen("Omega" + s, lin);
        r.verdict("spectrum of Omega" + s + " is the exponent-wise log of Phi" + s, spectra_correspond(mono, lin));
        auto er = verify_exp_relation(m.rep.phi[q], fc.omega[q]);
        r.verdict("charpoly(Phi" + s + "(exp y)) = charpoly(exp(Omega" + s + ")) mod deg>2", er.spectral);
        r.info_verdict("Phi" + s + "(exp y) = exp(Omega" + s + ") entrywise mod deg>2", er.entrywise,
                       er.mismatches.empty() ? std::string()
                                             : std::to_string(er.mismatches.size()) + " entries differ, first (" +
                                                   std::to_string(er.mismatches[0].row + 1) + "," +
                                                   std::to_string(er.mismatches[0].col + 1) + "): " +
                                                   er.mismatches[0].lhs + " vs " + er.mismatches[0].rhs);
        if (q + 1 < fc.omega.size()) {
            r.verdict("degree-two identity for Delta" + s,
                      !check_degree_two_identity(m.universal.boundaries[q], m.rep.phi[q], m.rep.phi[q + 1]),
                      first_entry(check_degree_two_identity(m.universal.boundaries[q], m.rep.phi[q], m.rep.phi[q + 1])));
            if (ac) {
                auto bad = check_chain_map(ac->complex.boundaries[q], fc.omega[q], fc.omega[q + 1]);
                r.verdict("mu" + s + "*Omega" + std::to_string(q + 1) + "=Omega" + s + "*mu" + s, !bad, first_entry(bad));
            }
        }
        if (job.at) {
            auto lambda = require_point(job, fc.omega[q].nvars());
            auto gm = gauss_manin_matrix(fc.omega[q], lambda);
            r.matrix("Omega" + s + "(lambda)", gm);
            auto roots = rational_roots(char_poly(gm));
            r.roots("Omega" + s + "(lambda)", roots);
            std::vector<Rational> predicted;
            for (std::size_t i = 0; i < lin.factors.size(); ++i)
                predicted.insert(predicted.end(), lin.factors[i].multiplicity, lin.value_at(i, lambda));
            std::sort(predicted.begin(), predicted.end());
            r.verdict("Gauss-Manin eigenvalues are the forms at lambda (degree " + s + ")", predicted == roots);
        }
    }
    return r.failures();
}

// Prints the action of `maps` on cohomology and checks its eigenvalues against
// the factor values of `reports` at the point.
void report_cohomology_action(Report& r, const RingComplex<Rational>& sc, const std::vector<Matrix<Rational>>& maps,
                              const std::vector<EigenReport>& reports, std::span<const Rational> point,
                              const std::string& name, const char* kind) {
    auto action = cohomology_action(sc, maps);
    for (std::size_t q = 0; q < action.size(); ++q) {
        const std::string label = name + std::to_string(q) + (kind[0] == 'm' ? "(t)" : "(lambda)");
        r.matrix(label, action[q]);
        if (action[q].rows() == 0) continue;
        auto roots = rational_roots(char_poly(action[q]));
        r.roots(label, roots);
        bool among = true;
        for (const auto& root : roots) {
            bool found = false;
            for (std::size_t i = 0; i < reports[q].factors.size(); ++i)
                if (reports[q].value_at(i, point) == root) found = true;
            among = among && found;
        }
        r.verdict("eigenvalues of " + label + " are " + kind + " evaluations", among && roots.size() == action[q].rows());
    }
}

std::size_t cmd_specialize(const JobSpec& job, Report& r) {
    RingComplex<Rational> sc;
    std::vector<Rational> point;
    std::optional<Monodromy> m;
    if (!job.endomorphism.empty()) m = load_monodromy(job);
    if (job.ring == 'x') {
        auto p = Presentation::load(require(job.presentation, "--presentation"));
        point = require_point(job, static_cast<std::size_t>(p.ngens));
        sc = universal_complex(p).specialize(point);
        r.section("universal complex at t");
    } else {
        auto ac = aomoto_complex(Arrangement::load(require(job.arrangement, "--arrangement")));
        point = require_point(job, ac.complex.boundaries.front().nvars());
        sc = ac.complex.specialize(point);
        r.section("aomoto complex at lambda");
    }
    for (std::size_t q = 0; q < sc.boundaries.size(); ++q) r.matrix("d" + std::to_string(q), sc.boundaries[q]);
    auto w = classify_weights(sc);
    r.numbers("ranks", w.betti);
    r.numbers("cohomology", w.cohomology);
    r.field("euler", std::to_string(w.euler_characteristic));
    r.field("verdict", w.non_resonant ? "non-resonant" : "resonant");
    r.field("top_degree_matches_euler", w.top_matches_euler ? "yes" : "no");
    if (!m) return r.failures();
    std::vector<Matrix<Rational>> maps;
    std::vector<EigenReport> reports;
    if (job.ring == 'x') {
        for (const auto& f : m->rep.phi) {
            maps.push_back(evaluate(f, std::span<const Rational>(point)));
            reports.push_back(eigen_monomials(f));
        }
        report_cohomology_action(r, sc, maps, reports, point, "Psi", "monomial");
    } else {
        for (const auto& f : formal_connection(m->rep.phi).omega) {
            maps.push_back(gauss_manin_matrix(f, point));
            reports.push_back(eigen_linear_forms(f, job.seed));
        }
        report_cohomology_action(r, sc, maps, reports, point, "OmegaBar", "linear form");
    }
    return r.failures();
}

std::size_t cmd_induced(const JobSpec& job, Report& r) {
    if (job.xi.empty()) throw ParseError("missing required option --xi");
    auto m = load_monodromy(job);
    auto ac = aomoto_complex(Arrangement::load(require(job.arrangement, "--arrangement")));
    auto fc = formal_connection(m.rep.phi);
    const std::size_t n = static_cast<std::size_t>(m.presentation.ngens);
    for (const auto& path : job.xi) {
        auto proj = ProjectionData::load(path, n);
        r.section("induced maps for " + path);
        r.field("component", proj.component.render());
        r.matrix("Xi", proj.xi, 'x');
        r.matrix("Upsilon", proj.upsilon, 'y');
        check(r, "Delta1*Xi=0 and mu1*Upsilon=0 on the component, Xi of full rank", [&] {
            verify_projection(proj, m.universal.boundaries[1], ac.complex.boundaries[1]);
            return std::string();
        });
        auto phibar = induced_map(proj.xi, m.rep.phi[2]);
        auto omegabar = induced_map(proj.upsilon, fc.omega[2]);
        r.matrix("PhiBar", phibar, 'x');
        r.matrix("OmegaBar", omegabar, 'y');
        r.eigen("PhiBar", eigen_monomials(phibar));
        r.eigen("OmegaBar", eigen_linear_forms(omegabar, job.seed));
        if (job.at) {
            auto pt = proj.component.restrict_point(require_point(job, n));
            if (job.ring == 'x')
                r.matrix("PhiBar(t)", evaluate(phibar, std::span<const Rational>(pt)));
            else
                r.matrix("OmegaBar(lambda)", gauss_manin_matrix(omegabar, *job.at));
        }
    }
    return r.failures();
}

std::size_t cmd_verify(const JobSpec& job, Report& r) {
    r.section("verify");
    auto a = Arrangement::load(require(job.arrangement, "--arrangement"));
    auto p = Presentation::load(require(job.presentation, "--presentation"));
    auto phi = Endomorphism::load(require(job.endomorphism, "--endomorphism"), p.ngens);
    auto cert = RelatorCertificate::load(require(job.certificate, "--certificate"), p);
    const std::size_t n = static_cast<std::size_t>(p.ngens);
    if (a.size() != n)
        throw ParseError("arrangement has " + std::to_string(a.size()) + " hyperplanes, presentation " +
                         std::to_string(n) + " generators");

    std::optional<RingComplex<LaurentPoly>> k;
    std::optional<AomotoComplex> ac;
    std::optional<UniversalRepresentation> rep;
    std::optional<FormalConnection> fc;
    auto none = [] { return std::string(); };

    check(r, "Delta0*Delta1=0", [&] {
        k = universal_complex(p);
        return none();
    });
    check(r, "mu*mu=0", [&] {
        ac = aomoto_complex(a);
        return none();
    });
    if (k && ac)
        for (std::size_t q = 0; q < 2; ++q)
            check(r, "linear_part(Delta" + std::to_string(q) + ")=mu" + std::to_string(q), [&] {
                return linear_part(k->boundaries[q]) == ac->complex.boundaries[q] ? none() : "matrices differ";
            });
    check(r, "certificate reduces to phi(r_l)", [&] {
        cert.validate(p, phi);
        return none();
    });
    check(r, "chain map Delta*Phi'=Phi*Delta", [&] {
        rep = universal_representation(p, phi, cert);
        return none();
    });
    if (!rep || !k || !ac) return r.failures();
    check(r, "Phi(1)=I and Omega integral", [&] {
        fc = formal_connection(rep->phi);
        return none();
    });
    if (!fc) return r.failures();
    for (std::size_t q = 0; q < rep->phi.size(); ++q) {
        const std::string s = std::to_string(q);
        std::optional<EigenReport> mono, lin;
        check(r, "eigen_monomials(Phi" + s + ")", [&] {
            mono = eigen_monomials(rep->phi[q]);
            return none();
        });
        check(r, "eigen_linear_forms(Omega" + s + ")", [&] {
            lin = eigen_linear_forms(fc->omega[q], job.seed);
            return none();
        });
        if (mono && lin)
            check(r, "spectrum of Omega" + s + " is the exponent-wise log of Phi" + s,
                  [&] { return spectra_correspond(*mono, *lin) ? none() : "spectra differ"; });
        auto er = verify_exp_relation(rep->phi[q], fc->omega[q]);
        r.verdict("charpoly(Phi" + s + "(exp y)) = charpoly(exp(Omega" + s + ")) mod deg>2", er.spectral);
        r.info_verdict("Phi" + s + "(exp y) = exp(Omega" + s + ") entrywise mod deg>2", er.entrywise,
                       er.entrywise ? std::string() : std::to_string(er.mismatches.size()) + " entries differ");
        if (q + 1 < rep->phi.size()) {
            auto d2 = check_degree_two_identity(k->boundaries[q], rep->phi[q], rep->phi[q + 1]);
            r.verdict("degree-two identity for Delta" + s, !d2, first_entry(d2));
            auto bad = check_chain_map(ac->complex.boundaries[q], fc->omega[q], fc->omega[q + 1]);
            r.verdict("mu" + s + "*Omega" + std::to_string(q + 1) + "=Omega" + s + "*mu" + s, !bad, first_entry(bad));
        }
    }
    for (const auto& path : job.xi) {
        check(r, "projection " + path, [&] {
            auto proj = ProjectionData::load(path, n);
            verify_projection(proj, k->boundaries[1], ac->complex.boundaries[1]);
            auto phibar = induced_map(proj.xi, rep->phi[2]);
            auto omegabar = induced_map(proj.upsilon, fc->omega[2]);
            auto mono = eigen_monomials(phibar);
            auto lin = eigen_linear_forms(omegabar, job.seed);
            return spectra_correspond(mono, lin) ? none() : "induced spectra differ";
        });
    }
    return r.failures();
}

} // namespace

std::size_t run(const std::string& command, const JobSpec& job, std::ostream& out) {
    Report r(out, job.format);
    if (command == "info") return cmd_info(job, r);
    if (command == "aomoto") return cmd_aomoto(job, r);
    if (command == "fox") return cmd_fox(job, r);
    if (command == "monodromy") return cmd_monodromy(job, r);
    if (command == "connection") return cmd_connection(job, r);
    if (command == "specialize") return cmd_specialize(job, r);
    if (command == "induced") return cmd_induced(job, r);
    if (command == "verify") return cmd_verify(job, r);
    throw ParseError("unknown subcommand '" + command + "'");
}

} // namespace arrmono::cli

#include "arrmono/report.hpp"

namespace arrmono::cli {

void Report::section(const std::string& name) {
    if (format_ == Format::Structured)
        out_ << "section " << name << "\n";
    else
        out_ << "== " << name << " ==\n";
}

void Report::field(const std::string& key, const std::string& value) {
    out_ << key << (format_ == Format::Structured ? " " : ": ") << value << "\n";
}

void Report::sets(const std::string& key, const std::vector<IndexSet>& sets) {
    std::string joined;
    for (const auto& s : sets) joined += (joined.empty() ? "" : " ") + render_index_set(s);
    field(key, joined.empty() ? "none" : joined);
}

void Report::numbers(const std::string& key, const std::vector<std::size_t>& values) {
    std::string joined;
    for (auto v : values) joined += (joined.empty() ? "" : " ") + std::to_string(v);
    field(key, joined);
}

void Report::eigen(const std::string& name, const EigenReport& report) {
    if (format_ == Format::Human) {
        field("eigenvalues of " + name, report.render());
        return;
    }
    std::string body;
    for (const auto& f : report.factors) {
        body += " [";
        for (std::size_t i = 0; i < f.exponents.size(); ++i) body += (i ? "," : "") + std::to_string(f.exponents[i]);
        body += "]^" + std::to_string(f.multiplicity);
    }
    out_ << "eigen " << name << " " << (report.kind == EigenKind::Monomial ? "monomial" : "linear") << body << "\n";
}

void Report::roots(const std::string& name, const std::vector<Rational>& roots) {
    std::string joined;
    for (const auto& r : roots) joined += (joined.empty() ? "" : " ") + to_string(r);
    field(format_ == Format::Structured ? "roots " + name : "rational eigenvalues of " + name,
          joined.empty() ? "none" : joined);
}

void Report::note(const std::string& text) {
    out_ << (format_ == Format::Structured ? "note " : "note: ") << text << "\n";
}

void Report::verdict(const std::string& identity, bool ok, const std::string& detail) {
    if (!ok) ++failures_;
    out_ << (format_ == Format::Structured ? "check " : "") << (ok ? "PASS " : "FAIL ") << identity
         << (detail.empty() ? "" : " -- " + detail) << "\n";
}

void Report::info_verdict(const std::string& identity, bool ok, const std::string& detail) {
    out_ << (format_ == Format::Structured ? "check " : "") << (ok ? "INFO-PASS " : "INFO-FAIL ") << identity
         << (detail.empty() ? "" : " -- " + detail) << "\n";
}

} // namespace arrmono::cli

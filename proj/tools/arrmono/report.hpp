#pragma once

#include "arrmono/arrangement.hpp"
#include "arrmono/eigen.hpp"
#include "arrmono/serialize.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arrmono::cli {

enum class Format { Human, Structured };

// Collects report lines in either format. Structured output is one record per
// line ("<keyword> <fields...>") plus matrix blocks, so runs diff cleanly.
class Report {
public:
    Report(std::ostream& out, Format format) : out_(out), format_(format) {}

    void section(const std::string& name);
    void field(const std::string& key, const std::string& value);
    void sets(const std::string& key, const std::vector<IndexSet>& sets);
    void numbers(const std::string& key, const std::vector<std::size_t>& values);
    void eigen(const std::string& name, const EigenReport& report);
    void roots(const std::string& name, const std::vector<Rational>& roots);
    void note(const std::string& text);

    template <class T>
    void matrix(const std::string& name, const Matrix<T>& m, char var = 'x') {
        if (format_ == Format::Structured) {
            out_ << serialize_matrix(name, m);
            return;
        }
        out_ << name << " (" << m.shape() << "):\n";
        if (m.rows() && m.cols()) out_ << render(m, var);
    }

    // Records a named check; failures are counted for the exit status.
    void verdict(const std::string& identity, bool ok, const std::string& detail = {});
    // A check reported for information only; never affects the exit status.
    void info_verdict(const std::string& identity, bool ok, const std::string& detail = {});

    std::size_t failures() const noexcept { return failures_; }
    Format format() const noexcept { return format_; }

private:
    std::ostream& out_;
    Format format_;
    std::size_t failures_ = 0;
};

} // namespace arrmono::cli

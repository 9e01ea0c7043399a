#pragma once

#include "arrmono/report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace arrmono::cli {

struct JobSpec {
    std::string arrangement;
    std::string presentation;
    std::string endomorphism;
    std::string certificate;
    std::vector<std::string> xi;
    std::optional<std::vector<Rational>> at;
    char ring = 'x';
    std::uint64_t seed = 1;
    Format format = Format::Human;
};

// Runs one subcommand and returns the number of failed verifications.
// Library errors propagate as exceptions.
std::size_t run(const std::string& command, const JobSpec& job, std::ostream& out);

} // namespace arrmono::cli

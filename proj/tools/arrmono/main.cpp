#include "arrmono/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitError = 3;

} // namespace

int main(int argc, char** argv) {
    using namespace arrmono;
    cli::JobSpec job;
    std::string at_text;
    std::string ring = "x";
    std::string format = "human";

    CLI::App app{"Universal complexes, monodromy and formal connections of hyperplane arrangements"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--arrangement,-a", job.arrangement, "arrangement file")->check(CLI::ExistingFile);
        sub->add_option("--presentation,-p", job.presentation, "group presentation file")->check(CLI::ExistingFile);
        sub->add_option("--endomorphism,-e", job.endomorphism, "generator images, one per line")->check(CLI::ExistingFile);
        sub->add_option("--certificate,-c", job.certificate, "relator certificate file")->check(CLI::ExistingFile);
        sub->add_option("--xi", job.xi, "projection matrix file (repeatable)")->check(CLI::ExistingFile);
        sub->add_option("--at", at_text, "comma-separated rational point");
        sub->add_option("--ring", ring, "evaluation ring for --at")->check(CLI::IsMember({"x", "y"}));
        sub->add_option("--seed", job.seed, "seed for probe points");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "structured"}));
    };
    const std::pair<const char*, const char*> commands[] = {
        {"info", "circuits, nbc basis and Betti numbers"},
        {"aomoto", "Aomoto complex boundaries mu^q"},
        {"fox", "universal complex Delta^q from a presentation"},
        {"monodromy", "universal representation Phi^q of an endomorphism"},
        {"connection", "formal connection Omega^q and eigenvalue reports"},
        {"specialize", "cohomology of a specialized complex and resonance verdict"},
        {"induced", "maps induced through projection matrices Xi"},
        {"verify", "full identity suite"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!at_text.empty()) job.at = parse_rational_list(at_text);
        job.ring = ring.front();
        job.format = format == "structured" ? cli::Format::Structured : cli::Format::Human;
        std::size_t failures = cli::run(command, job, std::cout);
        if (failures > 0) {
            std::cerr << "VerificationFailed: " << failures << " identit" << (failures == 1 ? "y" : "ies")
                      << " failed; see FAIL lines above\n";
            return kExitVerification;
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
}

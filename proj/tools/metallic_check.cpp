// metallic-check: verifies a lightlike submanifold description.

#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "metallic/metallic.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Exact verifier for lightlike submanifolds of flat metallic semi-Riemannian spaces"};
    app.require_subcommand(1);

    metallic::RunConfig cfg;
    std::vector<std::string> checks;
    std::string format = "text";
    std::string pq;
    std::string points, eta;

    auto *check = app.add_subcommand("check", "run the verification suites on a spec file");
    check->add_option("spec", cfg.path, "spec file")->required();
    check->add_option("--checks", checks, "subset of classify, identities, lemma44, theorems, examples")
        ->delimiter(',')
        ->check(CLI::IsMember(metallic::all_checks()));
    check->add_option("--points", points, "sample points, e.g. \"(1,0,0);(2,1,1/2)\"");
    check->add_option("--eta", eta, "characteristic field components, or 0");
    check->add_option("--seed", cfg.seed, "seed for random fields")->capture_default_str();
    check->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
    check->add_flag("--signature-as-stated", cfg.signature_as_stated, "use the signature_as_stated entry");
    check->add_option("--pq", pq, "override the metallic parameters, e.g. 2,1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : metallic::exit_parse;
    }

    cfg.checks.insert(checks.begin(), checks.end());
    cfg.format = format == "machine" ? metallic::Format::machine : metallic::Format::text;
    if (check->count("--points")) {
        cfg.points = points;
    }
    if (check->count("--eta")) {
        cfg.eta = eta;
    }
    if (!pq.empty()) {
        std::smatch m;
        static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
        if (!std::regex_match(pq, m, re)) {
            std::cerr << "--pq expects two positive integers, e.g. 2,1\n";
            return metallic::exit_parse;
        }
        cfg.pq = std::make_pair(std::stol(m[1]), std::stol(m[2]));
    }

    const metallic::RunReport rep = metallic::run(cfg);
    std::cout << metallic::render(rep, cfg);
    if (!rep.error.empty()) {
        std::cerr << "metallic-check: " << rep.error << "\n";
    }
    return rep.exit_code;
}

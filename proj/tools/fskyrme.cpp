// fskyrme <subcommand> --config <path> [--out <dir>] [--threads <k>]
//
// Subcommands: minimize | invariants | identities | convergence.
// FSKYRME_THREADS is honored when --threads is not given.

#include "fskyrme/runner.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

void usage(std::ostream& os) {
    os << "usage: fskyrme <minimize|invariants|identities|convergence>"
          " --config <path> [--out <dir>] [--threads <k>]\n";
}

} // namespace

int main(int argc, char** argv) {
    using namespace fskyrme;

    if (argc < 2) {
        usage(std::cerr);
        return 64;
    }
    std::string sub_s = argv[1];
    Subcommand sub;
    if (sub_s == "minimize") sub = Subcommand::Minimize;
    else if (sub_s == "invariants") sub = Subcommand::Invariants;
    else if (sub_s == "identities") sub = Subcommand::Identities;
    else if (sub_s == "convergence") sub = Subcommand::Convergence;
    else {
        usage(std::cerr);
        return 64;
    }

    std::string config_path, out_dir;
    int threads = 0;
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                usage(std::cerr);
                std::exit(64);
            }
            return argv[++i];
        };
        if (arg == "--config") config_path = next();
        else if (arg == "--out") out_dir = next();
        else if (arg == "--threads") threads = std::stoi(next());
        else {
            std::cerr << "fskyrme: unknown option " << arg << "\n";
            usage(std::cerr);
            return 64;
        }
    }
    if (config_path.empty()) {
        usage(std::cerr);
        return 64;
    }
    if (threads == 0) {
        if (const char* env = std::getenv("FSKYRME_THREADS")) threads = std::atoi(env);
    }

    try {
        RunConfig cfg = parse_config_file(config_path);
        return run(cfg, sub, out_dir, threads, std::cout);
    } catch (const Error& e) {
        std::cerr << "fskyrme: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "fskyrme: " << e.what() << "\n";
        return 70;
    }
}

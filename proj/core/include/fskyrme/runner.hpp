/**
 * @file runner.hpp
 * @brief Batch front door used by the fskyrme tool: minimize / invariants /
 *        identities / convergence, writing the documented output files.
 */

#ifndef FSKYRME_RUNNER_HPP
#define FSKYRME_RUNNER_HPP

#include "fskyrme/run_config.hpp"

#include <iosfwd>
#include <string>

namespace fskyrme {

enum class Subcommand { Minimize, Invariants, Identities, Convergence };

/// Execute one subcommand; returns the process exit status (0 iff all the
/// declared checks of that subcommand pass).  `out_override` replaces
/// cfg.out_dir when nonempty; `threads` <= 0 keeps the environment choice.
int run(const RunConfig& cfg, Subcommand sub, const std::string& out_override, int threads,
        std::ostream& log);

} // namespace fskyrme

#endif

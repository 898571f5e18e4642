/**
 * @file run_config.hpp
 * @brief key = value run configuration: grid, target, initializer, flow and
 *        output settings, with strict validation (unknown keys rejected).
 */

#ifndef FSKYRME_RUN_CONFIG_HPP
#define FSKYRME_RUN_CONFIG_HPP

#include "fskyrme/field.hpp"
#include "fskyrme/initializers.hpp"
#include "fskyrme/minimize.hpp"

#include <cstdint>
#include <string>

namespace fskyrme {

enum class InitializerKind { Constant, Hedgehog, HopfProjection, TorusWrap, RandomSmooth };

inline std::string to_string(InitializerKind k) {
    switch (k) {
        case InitializerKind::Constant: return "constant";
        case InitializerKind::Hedgehog: return "hedgehog";
        case InitializerKind::HopfProjection: return "hopf_projection";
        case InitializerKind::TorusWrap: return "torus_wrap";
        default: return "random_smooth";
    }
}

struct RunConfig {
    // grid
    int n = 16;
    double box_length = 1.0;
    BoundaryMode boundary_mode = BoundaryMode::Periodic;

    Target target = Target::SphereS2;

    // initializer
    InitializerKind initializer = InitializerKind::Constant;
    int profile_scale = 1;               // hedgehog / hopf_projection
    int wrap_axis_a = 0, wrap_axis_b = 1;
    int winding = 1;
    std::uint64_t seed = 1;
    double correlation_length = 0.25;

    FlowConfig flow;

    // outputs
    std::string out_dir = "out";
    long log_every = 10;
    long snapshot_every = 0;             // 0: final snapshot only
    bool emit_vtk = false;

    Grid3 grid() const { return Grid3(n, box_length, boundary_mode); }
};

/// Parse and validate a config from text (UTF-8 "key = value" lines, '#'
/// comments).  Unknown keys, bad values and initializer/target mismatches
/// throw with the offending line in the message.
RunConfig parse_config(const std::string& text);

/// Convenience: read a file and parse it.
RunConfig parse_config_file(const std::string& path);

/// Build the configured initial condition.
FieldMap make_initializer(const RunConfig& cfg);

} // namespace fskyrme

#endif

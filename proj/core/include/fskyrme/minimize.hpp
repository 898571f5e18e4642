/**
 * @file minimize.hpp
 * @brief Manifold-constrained gradient descent with Armijo backtracking and
 *        pointwise-normalized retraction, monitoring topological invariants
 *        so that lattice sector jumps are detected rather than absorbed.
 *
 * Steps are measured in PDE units: the update is psi -> retract(psi, -tau
 * grad/h^3), so the default step 0.1 h^2 sits below the heat-flow stability
 * limit independently of the grid.
 */

#ifndef FSKYRME_MINIMIZE_HPP
#define FSKYRME_MINIMIZE_HPP

#include "fskyrme/energy.hpp"
#include "fskyrme/topology.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace fskyrme {

struct FlowConfig {
    double step_init = -1.0;            // < 0: use 0.1 h^2
    double backtrack_factor = 0.5;
    double armijo_c = 1e-4;
    double grad_tol = -1.0;             // < 0: use 1e-6 (1 + E0)
    long max_iters = 10000;
    int invariant_check_every = 50;
    double skyrme_weight = 1.0;

    void validate() const;
};

enum class StopReason { GradTol, MaxIters, SectorJump, StepUnderflow };

inline std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::GradTol: return "grad_tol";
        case StopReason::MaxIters: return "max_iters";
        case StopReason::SectorJump: return "sector_jump";
        default: return "step_underflow";
    }
}

struct InvariantSnapshot {
    std::array<double, 3> fluxes{};
    double secondary = 0.0;   // hopf (S^2, trivial fluxes) or degree (SU(2))
    bool has_secondary = false;

    double max_change(const InvariantSnapshot& o) const {
        double m = 0.0;
        for (int p = 0; p < 3; ++p) m = std::max(m, std::abs(fluxes[std::size_t(p)] - o.fluxes[std::size_t(p)]));
        if (has_secondary && o.has_secondary) m = std::max(m, std::abs(secondary - o.secondary));
        return m;
    }
};

struct TraceRow {
    long iter = 0;
    double dirichlet = 0, skyrme = 0, total = 0;
    double grad_sup = 0;                // sup_x |grad|/h^3 (variational units)
    bool has_invariant = false;
    InvariantSnapshot invariant;
};

struct FlowTrace {
    std::vector<TraceRow> rows;
    StopReason reason = StopReason::MaxIters;
    long iterations = 0;

    /// Strict energy ledger: total non-increasing across accepted steps.
    bool monotone() const {
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].total > rows[i - 1].total) return false;
        return true;
    }
};

struct MinimizeResult {
    FieldMap field;
    FlowTrace trace;
};

/// Called after every accepted step (and once for the initial state).
using StepObserver = std::function<void(long iter, const FieldMap&, const EnergyReport&)>;

MinimizeResult minimize(const FieldMap& psi0, const FlowConfig& cfg,
                        const StepObserver& observer = {});

/// Invariant snapshot used by the flow monitor.
InvariantSnapshot invariant_snapshot(const FieldMap& f);

struct VkEntry {
    double charge = 0;   // |Q| >= 1
    double energy = 0;   // minimized energy
};

struct VkRow {
    double charge = 0, energy = 0, ratio = 0; // ratio = E / |Q|^{3/4}
};

struct VkTable {
    std::vector<VkRow> rows;
    double max_min_ratio = 1.0;
};

/// Vakulenko-Kapitanskii scaling probe: E / |Q|^{3/4} per entry.
VkTable vk_scaling_probe(const std::vector<VkEntry>& entries);

} // namespace fskyrme

#endif

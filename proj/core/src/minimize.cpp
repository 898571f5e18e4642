#include "fskyrme/minimize.hpp"

namespace fskyrme {

void FlowConfig::validate() const {
    if (backtrack_factor <= 0.0 || backtrack_factor >= 1.0)
        throw Error(Error::Kind::InvalidValue, "FlowConfig: backtrack_factor must be in (0,1)");
    if (armijo_c <= 0.0 || max_iters < 0 || invariant_check_every <= 0 || skyrme_weight < 0.0)
        throw Error(Error::Kind::InvalidValue, "FlowConfig: nonpositive parameter");
}

InvariantSnapshot invariant_snapshot(const FieldMap& f) {
    InvariantSnapshot snap;
    if (f.target == Target::GroupSU2) {
        snap.secondary = degree_su2(f);
        snap.has_secondary = true;
        return snap;
    }
    snap.fluxes = primary_fluxes(f);
    bool trivial = true;
    for (double v : snap.fluxes)
        if (std::abs(v) >= 0.1) trivial = false;
    if (trivial) {
        snap.secondary = hopf_invariant(f);
        snap.has_secondary = true;
    }
    return snap;
}

MinimizeResult minimize(const FieldMap& psi0, const FlowConfig& cfg,
                        const StepObserver& observer) {
    cfg.validate();
    psi0.assert_valid();

    const Grid3& g = psi0.grid;
    const double h = g.h();
    const double h3 = h * h * h;
    const double step0 = cfg.step_init > 0.0 ? cfg.step_init : 0.1 * h * h;
    const double step_cap = step0 * 1024.0;

    MinimizeResult res{psi0, {}};
    FieldMap& psi = res.field;
    FlowTrace& trace = res.trace;

    EnergyReport rep = energy_map(psi, cfg.skyrme_weight);
    const double grad_tol =
        cfg.grad_tol > 0.0 ? cfg.grad_tol : 1e-6 * (1.0 + rep.total);

    auto grad = gradient(psi, cfg.skyrme_weight);
    auto grad_sup = [&](const std::vector<Quat>& gr) {
        double m = 0.0;
        for (const auto& q : gr) m = std::max(m, q.norm());
        return m / h3;
    };
    double gsup = grad_sup(grad);

    InvariantSnapshot inv_prev = invariant_snapshot(psi);
    FieldMap safe = psi; // last snapshot known to be in the starting sector

    auto log_row = [&](long iter, bool with_inv, const InvariantSnapshot& snap) {
        TraceRow row;
        row.iter = iter;
        row.dirichlet = rep.dirichlet;
        row.skyrme = rep.skyrme;
        row.total = rep.total;
        row.grad_sup = gsup;
        row.has_invariant = with_inv;
        if (with_inv) row.invariant = snap;
        trace.rows.push_back(row);
    };
    log_row(0, true, inv_prev);
    if (observer) observer(0, psi, rep);

    double tau = step0;
    long iter = 0;
    trace.reason = StopReason::MaxIters;
    while (iter < cfg.max_iters) {
        if (gsup <= grad_tol) {
            trace.reason = StopReason::GradTol;
            break;
        }
        // descent direction -grad/h^3; expected decrease per unit tau
        double decrease = 0.0;
        for (const auto& q : grad) decrease += q.norm_sq();
        decrease /= h3;

        std::vector<Quat> step(grad.size());
        EnergyReport trial_rep;
        FieldMap trial;
        bool accepted = false;
        while (tau >= 1e-14) {
            double scale = -tau / h3;
            for (std::size_t s = 0; s < grad.size(); ++s) step[s] = grad[s] * scale;
            trial = retract(psi, step);
            trial_rep = energy_map(trial, cfg.skyrme_weight);
            if (trial_rep.total <= rep.total - cfg.armijo_c * tau * decrease) {
                accepted = true;
                break;
            }
            tau *= cfg.backtrack_factor;
        }
        if (!accepted) {
            trace.reason = StopReason::StepUnderflow;
            break;
        }

        psi = trial;
        rep = trial_rep;
        grad = gradient(psi, cfg.skyrme_weight);
        gsup = grad_sup(grad);
        ++iter;

        bool check_inv = (iter % cfg.invariant_check_every == 0);
        InvariantSnapshot snap;
        if (check_inv) {
            snap = invariant_snapshot(psi);
            if (snap.max_change(inv_prev) > 0.5) {
                trace.reason = StopReason::SectorJump;
                log_row(iter, true, snap);
                res.field = safe; // return the last in-sector snapshot
                trace.iterations = iter;
                return res;
            }
            inv_prev = snap;
            safe = psi;
        }
        log_row(iter, check_inv, snap);
        if (observer) observer(iter, psi, rep);

        // gentle step growth for the next iteration
        tau = std::min(tau / cfg.backtrack_factor, step_cap);
    }
    trace.iterations = iter;
    return res;
}

VkTable vk_scaling_probe(const std::vector<VkEntry>& entries) {
    VkTable out;
    double lo = 0.0, hi = 0.0;
    for (const auto& e : entries) {
        if (std::abs(e.charge) < 1.0)
            throw Error(Error::Kind::InvalidValue, "vk_scaling_probe: |Q| must be >= 1");
        VkRow row{e.charge, e.energy, e.energy / std::pow(std::abs(e.charge), 0.75)};
        out.rows.push_back(row);
        if (out.rows.size() == 1) {
            lo = hi = row.ratio;
        } else {
            lo = std::min(lo, row.ratio);
            hi = std::max(hi, row.ratio);
        }
    }
    out.max_min_ratio = (out.rows.size() < 2 || lo == 0.0) ? 1.0 : hi / lo;
    return out;
}

} // namespace fskyrme

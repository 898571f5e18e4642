#include "fskyrme/runner.hpp"

#include "fskyrme/identities.hpp"
#include "fskyrme/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fskyrme {

namespace {

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::string snapshot_name(const std::string& dir, long iter) {
    std::ostringstream os;
    os << dir << "/field_" << std::setw(6) << std::setfill('0') << iter << ".fsnap";
    return os.str();
}

double secondary_of(const InvariantSnapshot& snap) {
    return snap.has_secondary ? snap.secondary : 0.0;
}

int run_minimize(const RunConfig& cfg, const std::string& dir, std::ostream& log) {
    FieldMap psi0 = make_initializer(cfg);

    StepObserver observer;
    if (cfg.snapshot_every > 0)
        observer = [&](long iter, const FieldMap& f, const EnergyReport& rep) {
            if (iter > 0 && iter % cfg.snapshot_every == 0)
                write_snapshot(snapshot_name(dir, iter), f, iter, rep.total);
        };

    auto result = minimize(psi0, cfg.flow, observer);
    const FlowTrace& trace = result.trace;

    EnergyCsv csv(dir + "/energy.csv");
    InvariantSnapshot last_inv{};
    for (const auto& row : trace.rows) {
        if (row.has_invariant) last_inv = row.invariant;
        if (row.iter % cfg.log_every == 0 || row.iter == trace.iterations)
            csv.row(row.iter, row.dirichlet, row.skyrme, row.total, row.grad_sup,
                    secondary_of(last_inv));
    }

    EnergyReport final_rep = energy_map(result.field, cfg.flow.skyrme_weight);
    write_snapshot(snapshot_name(dir, trace.iterations), result.field, trace.iterations,
                   final_rep.total);
    InvariantReport rep = invariant_report(result.field);
    write_invariant_report(dir + "/report.json", rep);
    if (cfg.emit_vtk)
        write_vtk_scalar(dir + "/energy_density.vtk", result.field.grid, final_rep.density,
                         "energy_density");

    log << "minimize: " << trace.iterations << " iterations, E = " << format_g17(final_rep.total)
        << ", stop = " << to_string(trace.reason) << "\n";
    if (!trace.monotone()) {
        log << "minimize: energy ledger not monotone\n";
        return 2;
    }
    bool clean = trace.reason == StopReason::GradTol || trace.reason == StopReason::MaxIters;
    return clean ? 0 : 3;
}

int run_invariants(const RunConfig& cfg, const std::string& dir, std::ostream& log) {
    FieldMap f = make_initializer(cfg);
    InvariantReport rep = invariant_report(f);
    write_invariant_report(dir + "/report.json", rep);
    log << format_invariant_report(rep);
    return 0;
}

int run_identities(const RunConfig& cfg, const std::string& dir, std::ostream& log) {
    auto alg = algebraic_identity_suite(cfg.n, 100, cfg.seed);
    auto conv = convergence_identity_suite(cfg.n);

    std::ostringstream table;
    table << "algebraic identities (100 random fields, n = " << cfg.n << ")\n";
    for (const auto& r : alg)
        table << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  max residual "
              << format_g17(r.residual) << " (tol " << format_g17(r.tolerance) << ")\n";
    table << "refinement identities (n = " << cfg.n << " -> " << 2 * cfg.n << ")\n";
    for (const auto& r : conv)
        table << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  residual "
              << format_g17(r.coarse) << " -> " << format_g17(r.fine) << ", order "
              << std::fixed << std::setprecision(2) << r.order << "\n";

    log << table.str();
    std::ofstream out(dir + "/identities.txt");
    if (!out) throw Error(Error::Kind::Io, "cannot write " + dir + "/identities.txt");
    out << table.str();
    return (all_pass(alg) && all_pass(conv)) ? 0 : 1;
}

int run_convergence(const RunConfig& cfg, const std::string& dir, std::ostream& log) {
    auto conv = convergence_identity_suite(cfg.n);
    std::ostringstream table;
    table << "refinement study (n = " << cfg.n << " -> " << 2 * cfg.n << ")\n";
    for (const auto& r : conv)
        table << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  " << format_g17(r.coarse)
              << " -> " << format_g17(r.fine) << "  ratio " << std::fixed << std::setprecision(2)
              << r.ratio << "\n";
    log << table.str();
    std::ofstream out(dir + "/convergence.txt");
    if (!out) throw Error(Error::Kind::Io, "cannot write " + dir + "/convergence.txt");
    out << table.str();
    return all_pass(conv) ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg, Subcommand sub, const std::string& out_override, int threads,
        std::ostream& log) {
    set_threads(threads);
    std::string dir = out_override.empty() ? cfg.out_dir : out_override;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(Error::Kind::Io, "cannot create output directory " + dir);

    switch (sub) {
        case Subcommand::Minimize: return run_minimize(cfg, dir, log);
        case Subcommand::Invariants: return run_invariants(cfg, dir, log);
        case Subcommand::Identities: return run_identities(cfg, dir, log);
        default: return run_convergence(cfg, dir, log);
    }
}

} // namespace fskyrme

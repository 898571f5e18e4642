#include "fskyrme/run_config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fskyrme {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct Entry {
    std::string value;
    std::string line; // original line, for error messages
};

long parse_long(const Entry& e) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(e.value, &pos);
    } catch (const std::exception&) {
        throw Error(Error::Kind::TypeMismatch, "expected integer in line: " + e.line);
    }
    if (pos != e.value.size())
        throw Error(Error::Kind::TypeMismatch, "expected integer in line: " + e.line);
    return v;
}

double parse_double(const Entry& e) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw Error(Error::Kind::TypeMismatch, "expected number in line: " + e.line);
    }
    if (pos != e.value.size())
        throw Error(Error::Kind::TypeMismatch, "expected number in line: " + e.line);
    return v;
}

bool parse_bool(const Entry& e) {
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw Error(Error::Kind::TypeMismatch, "expected true/false in line: " + e.line);
}

} // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, Entry> kv;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Error::Kind::TypeMismatch, "expected key = value in line: " + raw);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error(Error::Kind::TypeMismatch, "expected key = value in line: " + raw);
        kv[key] = Entry{value, raw};
    }

    RunConfig cfg;
    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::optional<Entry>{};
        auto e = std::optional<Entry>(it->second);
        kv.erase(it);
        return e;
    };

    if (auto e = take("grid.n")) cfg.n = int(parse_long(*e));
    if (auto e = take("grid.box_length")) cfg.box_length = parse_double(*e);
    if (auto e = take("grid.boundary_mode")) {
        if (e->value == "periodic") cfg.boundary_mode = BoundaryMode::Periodic;
        else if (e->value == "fixed") cfg.boundary_mode = BoundaryMode::FixedBoundary;
        else throw Error(Error::Kind::TypeMismatch, "boundary_mode must be periodic|fixed: " + e->line);
    }
    if (auto e = take("target")) {
        if (e->value == "su2") cfg.target = Target::GroupSU2;
        else if (e->value == "s2") cfg.target = Target::SphereS2;
        else throw Error(Error::Kind::TypeMismatch, "target must be su2|s2: " + e->line);
    }
    if (auto e = take("initializer")) {
        if (e->value == "constant") cfg.initializer = InitializerKind::Constant;
        else if (e->value == "hedgehog") cfg.initializer = InitializerKind::Hedgehog;
        else if (e->value == "hopf_projection") cfg.initializer = InitializerKind::HopfProjection;
        else if (e->value == "torus_wrap") cfg.initializer = InitializerKind::TorusWrap;
        else if (e->value == "random_smooth") cfg.initializer = InitializerKind::RandomSmooth;
        else throw Error(Error::Kind::TypeMismatch, "unknown initializer: " + e->line);
    }
    if (auto e = take("initializer.profile_scale")) cfg.profile_scale = int(parse_long(*e));
    if (auto e = take("initializer.axes")) {
        if (e->value.size() != 2 || e->value[0] < '1' || e->value[0] > '3' || e->value[1] < '1' ||
            e->value[1] > '3' || e->value[0] == e->value[1])
            throw Error(Error::Kind::TypeMismatch,
                        "axes must be a pair like 12, 23 or 31: " + e->line);
        cfg.wrap_axis_a = e->value[0] - '1';
        cfg.wrap_axis_b = e->value[1] - '1';
    }
    if (auto e = take("initializer.winding")) cfg.winding = int(parse_long(*e));
    if (auto e = take("initializer.seed")) cfg.seed = std::uint64_t(parse_long(*e));
    if (auto e = take("initializer.correlation_length")) cfg.correlation_length = parse_double(*e);

    if (auto e = take("flow.step_init"))
        cfg.flow.step_init = (e->value == "auto") ? -1.0 : parse_double(*e);
    if (auto e = take("flow.backtrack_factor")) cfg.flow.backtrack_factor = parse_double(*e);
    if (auto e = take("flow.armijo_c")) cfg.flow.armijo_c = parse_double(*e);
    if (auto e = take("flow.grad_tol"))
        cfg.flow.grad_tol = (e->value == "auto") ? -1.0 : parse_double(*e);
    if (auto e = take("flow.max_iters")) cfg.flow.max_iters = parse_long(*e);
    if (auto e = take("flow.invariant_check_every"))
        cfg.flow.invariant_check_every = int(parse_long(*e));
    if (auto e = take("flow.skyrme_weight")) cfg.flow.skyrme_weight = parse_double(*e);

    if (auto e = take("outputs.dir")) cfg.out_dir = e->value;
    if (auto e = take("outputs.log_every")) cfg.log_every = parse_long(*e);
    if (auto e = take("outputs.snapshot_every")) cfg.snapshot_every = parse_long(*e);
    if (auto e = take("outputs.emit_vtk")) cfg.emit_vtk = parse_bool(*e);

    if (!kv.empty())
        throw Error(Error::Kind::UnknownKey, "unknown config key in line: " + kv.begin()->second.line);

    // validation
    if (cfg.n < 4) throw Error(Error::Kind::InvalidValue, "grid.n must be >= 4");
    if (!(cfg.box_length > 0.0)) throw Error(Error::Kind::InvalidValue, "grid.box_length must be > 0");
    if (cfg.log_every <= 0 || cfg.snapshot_every < 0)
        throw Error(Error::Kind::InvalidValue, "outputs.log_every must be > 0, snapshot_every >= 0");
    cfg.flow.validate();

    switch (cfg.initializer) {
        case InitializerKind::Hedgehog:
            if (cfg.target != Target::GroupSU2)
                throw Error(Error::Kind::IncompatibleInitializer,
                            "hedgehog initializes su2 maps; use hopf_projection for s2");
            break;
        case InitializerKind::HopfProjection:
        case InitializerKind::TorusWrap:
            if (cfg.target != Target::SphereS2)
                throw Error(Error::Kind::IncompatibleInitializer,
                            to_string(cfg.initializer) + " initializes s2 maps");
            break;
        default: break;
    }
    if (cfg.initializer == InitializerKind::TorusWrap &&
        cfg.boundary_mode != BoundaryMode::Periodic)
        throw Error(Error::Kind::IncompatibleInitializer,
                    "torus_wrap needs a periodic grid (fluxes live on 2-tori)");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Kind::Io, "cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

FieldMap make_initializer(const RunConfig& cfg) {
    Grid3 g = cfg.grid();
    switch (cfg.initializer) {
        case InitializerKind::Constant: return constant_field(g, cfg.target);
        case InitializerKind::Hedgehog: return hedgehog(g, cfg.profile_scale);
        case InitializerKind::HopfProjection: return hopf_projection(g, cfg.profile_scale);
        case InitializerKind::TorusWrap:
            return torus_wrap(g, cfg.wrap_axis_a, cfg.wrap_axis_b, cfg.winding);
        default: return random_smooth(g, cfg.target, cfg.seed, cfg.correlation_length);
    }
}

} // namespace fskyrme

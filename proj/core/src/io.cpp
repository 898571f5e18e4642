#include "fskyrme/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace fskyrme {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void put_le_double(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int b = 0; b < 8; ++b) out.push_back(char((bits >> (8 * b)) & 0xff));
}

double get_le_double(const char* p) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b)
        bits |= std::uint64_t(static_cast<unsigned char>(p[b])) << (8 * b);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

void write_snapshot(const std::string& path, const FieldMap& field, long iteration,
                    double energy) {
    std::ostringstream head;
    head << "FSKYRME1\n"
         << "target=" << to_string(field.target) << "\n"
         << "n=" << field.grid.n << "\n"
         << "box_length=" << format_g17(field.grid.box_length) << "\n"
         << "boundary_mode=" << to_string(field.grid.mode) << "\n"
         << "iteration=" << iteration << "\n"
         << "energy=" << format_g17(energy) << "\n";

    std::string payload;
    const int comps = field.target == Target::GroupSU2 ? 4 : 3;
    payload.reserve(std::size_t(field.grid.sites()) * comps * 8);
    for (const auto& q : field.values) {
        if (comps == 4) put_le_double(payload, q.w);
        put_le_double(payload, q.x);
        put_le_double(payload, q.y);
        put_le_double(payload, q.z);
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Error::Kind::Io, "cannot write snapshot " + path);
    out << head.str() << payload;
    if (!out) throw Error(Error::Kind::Io, "short write on snapshot " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Error::Kind::Io, "cannot read snapshot " + path);

    auto next_line = [&]() {
        std::string line;
        if (!std::getline(in, line)) throw Error(Error::Kind::Io, "truncated snapshot header " + path);
        return line;
    };
    auto value_of = [&](const std::string& line, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (line.rfind(prefix, 0) != 0)
            throw Error(Error::Kind::Io, "snapshot header: expected " + prefix + " in " + path);
        return line.substr(prefix.size());
    };

    if (next_line() != "FSKYRME1") throw Error(Error::Kind::Io, "bad snapshot magic in " + path);
    std::string target_s = value_of(next_line(), "target");
    int n = std::stoi(value_of(next_line(), "n"));
    double box = std::stod(value_of(next_line(), "box_length"));
    std::string mode_s = value_of(next_line(), "boundary_mode");
    long iteration = std::stol(value_of(next_line(), "iteration"));
    double energy = std::stod(value_of(next_line(), "energy"));

    Target target;
    if (target_s == "su2") target = Target::GroupSU2;
    else if (target_s == "s2") target = Target::SphereS2;
    else throw Error(Error::Kind::Io, "snapshot: unknown target " + target_s);
    BoundaryMode mode;
    if (mode_s == "periodic") mode = BoundaryMode::Periodic;
    else if (mode_s == "fixed") mode = BoundaryMode::FixedBoundary;
    else throw Error(Error::Kind::Io, "snapshot: unknown boundary_mode " + mode_s);

    Grid3 grid(n, box, mode);
    const int comps = target == Target::GroupSU2 ? 4 : 3;
    const std::size_t bytes = std::size_t(grid.sites()) * comps * 8;
    std::string payload(bytes, '\0');
    in.read(payload.data(), std::streamsize(bytes));
    if (std::size_t(in.gcount()) != bytes)
        throw Error(Error::Kind::Io, "snapshot payload truncated in " + path);

    Snapshot snap{FieldMap(grid, target, Quat()), iteration, energy};
    const char* p = payload.data();
    for (auto& q : snap.field.values) {
        if (comps == 4) {
            q.w = get_le_double(p); p += 8;
        } else {
            q.w = 0.0;
        }
        q.x = get_le_double(p); p += 8;
        q.y = get_le_double(p); p += 8;
        q.z = get_le_double(p); p += 8;
    }
    return snap;
}

EnergyCsv::EnergyCsv(const std::string& path) : path_(path), out_(path) {
    if (!out_) throw Error(Error::Kind::Io, "cannot write " + path_);
    out_ << "iter,E_dirichlet,E_skyrme,E_total,grad_norm,hopf_or_degree\n";
}

void EnergyCsv::row(long iter, double dirichlet, double skyrme, double total, double grad_norm,
                    double hopf_or_degree) {
    out_ << iter << ',' << format_g17(dirichlet) << ',' << format_g17(skyrme) << ','
         << format_g17(total) << ',' << format_g17(grad_norm) << ','
         << format_g17(hopf_or_degree) << "\n";
    if (!out_) throw Error(Error::Kind::Io, "cannot append to " + path_);
}

void write_vtk_scalar(const std::string& path, const Grid3& grid,
                      const std::vector<double>& density, const std::string& name) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::Io, "cannot write " + path);
    const double h = grid.h();
    out << "# vtk DataFile Version 2.0\n"
        << name << "\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << grid.n << " " << grid.n << " " << grid.n << "\n"
        << "ORIGIN 0 0 0\n"
        << "SPACING " << format_g17(h) << " " << format_g17(h) << " " << format_g17(h) << "\n"
        << "POINT_DATA " << grid.sites() << "\n"
        << "SCALARS " << name << " double 1\n"
        << "LOOKUP_TABLE default\n";
    for (double v : density) out << format_g17(v) << "\n";
    if (!out) throw Error(Error::Kind::Io, "short write on " + path);
}

std::string format_invariant_report(const InvariantReport& rep) {
    std::ostringstream os;
    os << "{\n";
    if (rep.degree)
        os << "  \"degree\": {\"raw\": " << format_g17(*rep.degree)
           << ", \"rounded\": " << rep.degree_rounded << "},\n";
    else
        os << "  \"degree\": null,\n";
    os << "  \"fluxes\": {\"raw\": [" << format_g17(rep.fluxes[0]) << ", "
       << format_g17(rep.fluxes[1]) << ", " << format_g17(rep.fluxes[2]) << "], \"rounded\": ["
       << rep.fluxes_rounded[0] << ", " << rep.fluxes_rounded[1] << ", " << rep.fluxes_rounded[2]
       << "]},\n";
    if (rep.hopf)
        os << "  \"hopf\": {\"raw\": " << format_g17(*rep.hopf)
           << ", \"rounded\": " << rep.hopf_rounded << "},\n";
    else
        os << "  \"hopf\": null,\n";
    os << "  \"method\": \"" << to_string(rep.method) << "\",\n"
       << "  \"drift\": " << format_g17(rep.drift) << ",\n"
       << "  \"trusted\": " << (rep.trusted ? "true" : "false") << "\n"
       << "}\n";
    return os.str();
}

void write_invariant_report(const std::string& path, const InvariantReport& rep) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::Io, "cannot write " + path);
    out << format_invariant_report(rep);
    if (!out) throw Error(Error::Kind::Io, "short write on " + path);
}

} // namespace fskyrme

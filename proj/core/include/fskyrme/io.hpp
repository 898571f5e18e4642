/**
 * @file io.hpp
 * @brief Bit-documented file formats: FSKYRME1 field snapshots (text header,
 *        little-endian f64 payload), the energy.csv log, VTK legacy ASCII
 *        density dumps and the invariant report.
 */

#ifndef FSKYRME_IO_HPP
#define FSKYRME_IO_HPP

#include "fskyrme/field.hpp"
#include "fskyrme/topology.hpp"

#include <fstream>
#include <string>
#include <vector>

namespace fskyrme {

struct Snapshot {
    FieldMap field;
    long iteration = 0;
    double energy = 0;
};

/// FSKYRME1 snapshot: 7 header lines, then row-major (x3 slowest)
/// little-endian doubles, 4 per site for su2 and 3 per site for s2.
void write_snapshot(const std::string& path, const FieldMap& field, long iteration,
                    double energy);
Snapshot read_snapshot(const std::string& path);

class EnergyCsv {
public:
    explicit EnergyCsv(const std::string& path);
    /// Columns: iter,E_dirichlet,E_skyrme,E_total,grad_norm,hopf_or_degree;
    /// full double precision (17 significant digits).
    void row(long iter, double dirichlet, double skyrme, double total, double grad_norm,
             double hopf_or_degree);

private:
    std::string path_;
    std::ofstream out_;
};

/// VTK legacy ASCII STRUCTURED_POINTS scalar dump of a per-site density.
void write_vtk_scalar(const std::string& path, const Grid3& grid,
                      const std::vector<double>& density, const std::string& name);

/// Invariant report as JSON-like text.
std::string format_invariant_report(const InvariantReport& rep);
void write_invariant_report(const std::string& path, const InvariantReport& rep);

/// Full-precision decimal rendering that round-trips doubles.
std::string format_g17(double v);

} // namespace fskyrme

#endif

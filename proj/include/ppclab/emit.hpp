#pragma once

#include <filesystem>
#include <vector>

#include "ppclab/energy.hpp"
#include "ppclab/paircorr.hpp"
#include "ppclab/variance.hpp"

namespace ppclab {

// Output CSVs carry a header row, up to 17 significant digits, LF newlines.
std::string format_double(double v);

void write_paircorr_csv(const std::filesystem::path& path,
                        const std::vector<PairCorrCurve>& per_alpha,
                        const PairCorrCurve& mean_curve);
void write_energy_csv(const std::filesystem::path& path, const EnergyReport& report);
void write_energy_json(const std::filesystem::path& path, const EnergyReport& report);
void write_variance_csv(const std::filesystem::path& path,
                        const std::vector<VarianceEstimate>& estimates);
void write_variance_json(const std::filesystem::path& path,
                         const std::vector<VarianceEstimate>& estimates);

// Standalone SVG: empirical R2 against s plus the (2s)^d reference, exactly
// two polylines and an axis group.
void emit_plot(const PairCorrCurve& curve, const std::filesystem::path& path);
// log-log scatter with the fitted slope line; the legend carries
// "slope=<value>±<stderr>".
void emit_plot(const EnergyReport& report, const std::filesystem::path& path);

}  // namespace ppclab

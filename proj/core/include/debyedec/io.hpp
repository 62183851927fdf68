#ifndef DEBYEDEC_IO_HPP
#define DEBYEDEC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "debyedec/decomposer.hpp"
#include "debyedec/spectrum.hpp"

namespace debyedec {

/// Parses a spectrum from CSV text. Expected layout: optional `#` comment
/// and blank lines anywhere, a header row `T,Q` or `T,Q,var_eps`, then one
/// record per line. The var_eps column, when present, must repeat a single
/// constant value. Rows arriving out of order are sorted with a warning.
/// Throws std::runtime_error with the offending line number on malformed
/// input or invariant violations (duplicate T names the later line).
Spectrum read_spectrum_csv(std::istream& in,
                           std::vector<std::string>* warnings = nullptr);
Spectrum read_spectrum_csv(const std::string& path,
                           std::vector<std::string>* warnings = nullptr);

/// Writes the CSV form read_spectrum_csv accepts, with 17 significant
/// digits so a read-back reproduces the spectrum bit-exactly.
void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out);
void write_spectrum_csv(const Spectrum& spectrum, const std::string& path);

/// Serializes a decomposition result as JSON with a stable key order and
/// numbers at 17 significant digits (non-finite values become null), so
/// identical results produce byte-identical files. Top level: status,
/// accepted (null when no model was adequate), attempts.
void write_result_json(const DecompositionResult& result, std::ostream& out);
void write_result_json(const DecompositionResult& result,
                       const std::string& path);

/// Renders the decomposition as a standalone SVG: measured points as
/// markers, the total fitted curve solid, each component curve dashed, and
/// a residual panel below; axes labeled "T (K)" and "Q". Plots the accepted
/// attempt, or the last finished one when nothing was adequate.
void emit_plot_svg(const Spectrum& spectrum, const DecompositionResult& result,
                   std::ostream& out);
void emit_plot_svg(const Spectrum& spectrum, const DecompositionResult& result,
                   const std::string& path);

} // namespace debyedec

#endif

#ifndef PTQM_IO_HPP
#define PTQM_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "ptqm/grid.hpp"
#include "ptqm/potential.hpp"
#include "ptqm/types.hpp"

namespace ptqm::io {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kCsvDigits = 12;

/// Potential document keys: re_poly, im_poly,
/// deltas[{strength_re, strength_im, location}], re_tabulated /
/// im_tabulated (paths to x,value CSV whose x column must match the grid).
PotentialSpec potential_from_json_text(const std::string& text, const Grid& grid,
                                       const std::filesystem::path& base_dir = ".");
std::string potential_to_json_text(const PotentialSpec& spec);

/// CSV with one comment header line ("# ..."); rows of fixed columns at
/// 12 significant digits. Payload is deterministic: rerunning a config
/// reproduces it byte for byte, only the header timestamp moves.
void write_csv(const std::filesystem::path& path, const std::string& header_comment,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

std::string format_sig(double v);

/// Dense complex matrix blob: magic "PTM1", u32 dim, then dim*dim
/// little-endian (re, im) float64 pairs in row-major order.
void write_dense_matrix(const std::filesystem::path& path, const cmat& m);
cmat read_dense_matrix(const std::filesystem::path& path);

/// x,value samples; x column must match the grid nodes to 1e-9.
std::vector<double> read_tabulated_csv(const std::filesystem::path& path, const Grid& grid);

}  // namespace ptqm::io

#endif

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace surfenc {
namespace shots {

// Nine-qubit readout records from one experiment: a one-line JSON metadata
// header (must carry "basis": "Z" or "X"; anything else — delay time, device
// label — is preserved verbatim), then CSV rows of nine 0/1 entries where 1
// means that qubit read -1.
struct ShotDataset {
  char basis = 'Z';
  nlohmann::json metadata;
  std::vector<std::array<std::uint8_t, 9>> rows;
};

std::string dataset_to_csv(const ShotDataset& data);
ShotDataset dataset_from_csv(const std::string& text);

struct ShotAnalysis {
  double p_l;              // fraction of Z rows hard-decoding to -1
  double p_z;              // Z rows with trivial syndrome and Z_L = +1
  double p_x;              // X rows with all four X parities +1
  double fidelity_bound;   // p_z + p_x - 1
  long z_rows;
  long x_rows;
};

// Joint Z-basis / X-basis analysis; throws std::runtime_error on an empty
// dataset or std::invalid_argument on basis mismatch.
ShotAnalysis analyze_shots(const ShotDataset& z_data, const ShotDataset& x_data);

}  // namespace shots
}  // namespace surfenc

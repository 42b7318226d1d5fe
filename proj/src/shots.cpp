#include "surfenc/shots.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "surfenc/surface9.hpp"

namespace surfenc {
namespace shots {

std::string dataset_to_csv(const ShotDataset& data) {
  nlohmann::json meta = data.metadata;
  meta["basis"] = std::string(1, data.basis);
  std::ostringstream out;
  out << meta.dump() << '\n';
  for (const auto& row : data.rows) {
    for (int q = 0; q < 9; ++q) {
      if (q) out << ',';
      out << static_cast<int>(row[q]);
    }
    out << '\n';
  }
  return out.str();
}

ShotDataset dataset_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("shot csv: empty input");
  }
  ShotDataset data;
  try {
    data.metadata = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("shot csv: bad metadata line: ") +
                                e.what());
  }
  if (!data.metadata.contains("basis") ||
      !data.metadata["basis"].is_string()) {
    throw std::invalid_argument("shot csv: metadata needs a \"basis\" string");
  }
  const std::string basis = data.metadata["basis"];
  if (basis != "Z" && basis != "X") {
    throw std::invalid_argument("shot csv: basis must be \"Z\" or \"X\"");
  }
  data.basis = basis[0];
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    std::array<std::uint8_t, 9> row{};
    std::istringstream ls(line);
    std::string tok;
    int q = 0;
    while (std::getline(ls, tok, ',')) {
      if (!tok.empty() && tok.back() == '\r') tok.pop_back();
      if (q >= 9 || (tok != "0" && tok != "1")) {
        throw std::invalid_argument("shot csv: bad row at line " +
                                    std::to_string(line_no));
      }
      row[q++] = static_cast<std::uint8_t>(tok == "1");
    }
    if (q != 9) {
      throw std::invalid_argument("shot csv: expected 9 entries at line " +
                                  std::to_string(line_no));
    }
    data.rows.push_back(row);
  }
  return data;
}

namespace {

std::uint16_t row_mask(const std::array<std::uint8_t, 9>& row) {
  std::uint16_t mask = 0;
  for (int q = 0; q < 9; ++q) {
    if (row[q]) mask |= static_cast<std::uint16_t>(1u << q);
  }
  return mask;
}

}  // namespace

ShotAnalysis analyze_shots(const ShotDataset& z_data,
                           const ShotDataset& x_data) {
  if (z_data.basis != 'Z' || x_data.basis != 'X') {
    throw std::invalid_argument("analyze_shots: need a Z and an X dataset");
  }
  if (z_data.rows.empty() || x_data.rows.empty()) {
    throw std::runtime_error("analyze_shots: insufficient data (empty dataset)");
  }
  long fails = 0;
  long z_clean = 0;
  for (const auto& row : z_data.rows) {
    const std::uint16_t mask = row_mask(row);
    if (surf9::hard_decode_logical(mask) < 0) ++fails;
    // Joint pass: all four Z-stabilizer parities and the raw Z_L parity +1.
    if (surf9::z_syndrome_bits(mask) == 0 &&
        (std::popcount(
             static_cast<unsigned>(mask & surf9::kLogicalZSupport)) &
         1) == 0) {
      ++z_clean;
    }
  }
  long x_clean = 0;
  for (const auto& row : x_data.rows) {
    bool clean = true;
    const std::uint16_t mask = row_mask(row);
    for (const auto sup : surf9::kXSupports) {
      if (std::popcount(static_cast<unsigned>(mask & sup)) & 1) {
        clean = false;
        break;
      }
    }
    if (clean) ++x_clean;
  }
  ShotAnalysis a;
  a.z_rows = static_cast<long>(z_data.rows.size());
  a.x_rows = static_cast<long>(x_data.rows.size());
  a.p_l = static_cast<double>(fails) / static_cast<double>(a.z_rows);
  a.p_z = static_cast<double>(z_clean) / static_cast<double>(a.z_rows);
  a.p_x = static_cast<double>(x_clean) / static_cast<double>(a.x_rows);
  a.fidelity_bound = surf9::fidelity_lower_bound(a.p_z, a.p_x);
  return a;
}

}  // namespace shots
}  // namespace surfenc

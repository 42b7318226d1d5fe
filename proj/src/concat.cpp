#include "surfenc/concat.hpp"

#include <stdexcept>

namespace surfenc {
namespace concat {

namespace {

constexpr std::array<int, 0> kBlocksNone{};
constexpr std::array<int, 1> kBlocks5 = {4};
constexpr std::array<int, 2> kBlocks28 = {1, 7};
constexpr std::array<int, 3> kBlocks258 = {1, 4, 7};

}  // namespace

const char* edt_mode_name(EdtMode mode) {
  switch (mode) {
    case EdtMode::kNone: return "none";
    case EdtMode::kEdt5: return "5";
    case EdtMode::kEdt28: return "28";
    case EdtMode::kEdt258: return "258";
  }
  throw std::invalid_argument("edt_mode_name: bad mode");
}

EdtMode edt_mode_from_name(const std::string& name) {
  if (name == "none") return EdtMode::kNone;
  if (name == "5") return EdtMode::kEdt5;
  if (name == "28") return EdtMode::kEdt28;
  if (name == "258") return EdtMode::kEdt258;
  throw std::invalid_argument("edt_mode_from_name: expected none/5/28/258, got '" +
                              name + "'");
}

std::span<const int> edt_blocks(EdtMode mode) {
  switch (mode) {
    case EdtMode::kNone: return kBlocksNone;
    case EdtMode::kEdt5: return kBlocks5;
    case EdtMode::kEdt28: return kBlocks28;
    case EdtMode::kEdt258: return kBlocks258;
  }
  throw std::invalid_argument("edt_blocks: bad mode");
}

int num_wires(EdtMode mode) {
  return 81 + 18 * static_cast<int>(edt_blocks(mode).size());
}

int num_cnots(EdtMode mode) {
  // 9 block encoders of 8 CNOTs + 8 encoded CNOTs of 9; each EDT adds two
  // more block encoders and two encoded CNOTs.
  return 9 * 8 + 8 * 9 + 34 * static_cast<int>(edt_blocks(mode).size());
}

std::array<BlockLayout, 9> final_layouts(EdtMode mode) {
  std::array<BlockLayout, 9> layouts;
  for (int b = 0; b < 9; ++b) layouts[b] = BlockLayout::contiguous(9 * b);
  for (const int b : kPlusBlocks) layouts[b].renumber();
  int fresh = 81;
  for (const int j : edt_blocks(mode)) {
    layouts[j] = BlockLayout::contiguous(fresh + 9);  // the B half survives
    fresh += 18;
  }
  return layouts;
}

std::vector<PauliString> logical_zero_l2_generators(EdtMode mode) {
  const int n = num_wires(mode);
  const auto layouts = final_layouts(mode);

  auto embedded = [&](const BlockLayout& layout, std::uint16_t support,
                      char p) {
    PauliString out(n);
    for (int q = 0; q < 9; ++q) {
      if (support & (1u << q)) {
        out *= PauliString::single(n, layout.wire_of_pos[q], p);
      }
    }
    return out;
  };

  std::vector<PauliString> gens;
  gens.reserve(81);
  // Per-block code stabilizers (72 generators).
  for (int b = 0; b < 9; ++b) {
    for (const auto s : surf9::kZSupports) {
      gens.push_back(embedded(layouts[b], s, 'Z'));
    }
    for (const auto s : surf9::kXSupports) {
      gens.push_back(embedded(layouts[b], s, 'X'));
    }
  }
  // Outer code over the block logicals (8 + 1 generators).
  auto outer = [&](std::uint16_t block_support, std::uint16_t inner_support,
                   char p) {
    PauliString out(n);
    for (int b = 0; b < 9; ++b) {
      if (block_support & (1u << b)) {
        out *= embedded(layouts[b], inner_support, p);
      }
    }
    return out;
  };
  for (const auto s : surf9::kZSupports) {
    gens.push_back(outer(s, surf9::kLogicalZSupport, 'Z'));
  }
  for (const auto s : surf9::kXSupports) {
    gens.push_back(outer(s, surf9::kLogicalXSupport, 'X'));
  }
  gens.push_back(outer(surf9::kLogicalZSupport, surf9::kLogicalZSupport, 'Z'));
  return gens;
}

EncodingOutcome prepare_logical_zero_l2(TableauEngine& eng, EdtMode mode,
                                        const NoiseModel& noise,
                                        SplitRng& fault_rng) {
  EncodingOutcome out;
  while (true) {
    ++out.attempts;
    BernoulliFaults faults{noise.p_cnot, &fault_rng};
    const AttemptResult r = run_attempt(eng, mode, faults, &out.level1_preps);
    if (!r.detected) {
      out.layouts = r.layouts;
      return out;
    }
  }
}

CliffordCircuit level2_circuit(EdtMode mode) {
  RecorderEngine rec;
  NoFaults faults;
  AttemptResult r = run_attempt(rec, mode, faults);
  measure_register(rec, r);
  return rec.take();
}

}  // namespace concat
}  // namespace surfenc

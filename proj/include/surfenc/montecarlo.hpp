#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "surfenc/concat.hpp"
#include "surfenc/softdec.hpp"

namespace surfenc {
namespace mc {

enum class Decoder { kHard, kSoft };
enum class Backend { kFrame, kTableau };

const char* decoder_name(Decoder d);
Decoder decoder_from_name(const std::string& name);
const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);

struct ExperimentConfig {
  std::vector<double> p_cnot;
  long shots = 1;
  concat::EdtMode mode = concat::EdtMode::kNone;
  Decoder decoder = Decoder::kSoft;
  double p_e = 0.01;
  std::uint64_t seed = 1;
  int threads = 1;
  Backend backend = Backend::kFrame;

  void validate() const;  // throws std::invalid_argument
};

// One accepted shot: the preparation is restarted until no EDT detects, the
// 81 data wires are measured, and the two-level decoder is applied.
struct TrialRecord {
  long shot = 0;
  double p_cnot = 0.0;
  long attempts = 0;
  long level1_preps = 0;
  std::array<std::uint16_t, 9> block_masks{};  // bit p = position p read -1
  std::array<int, 9> block_syndromes{};        // packed Z-syndrome bits
  std::array<int, 9> block_hard_values{};      // per-block hard logical
  double posterior_plus = 1.0;  // level-2 soft posterior (soft decoder only)
  int verdict = +1;
  bool failed = false;
};

nlohmann::json trial_to_json(const TrialRecord& r);

struct RatePoint {
  double p_cnot = 0.0;
  long trials = 0;
  long failures = 0;
  double p_l = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double mean_attempts = 0.0;
  double mean_l1preps = 0.0;
};

struct WilsonInterval {
  double lo;
  double hi;
};

// Wilson score interval at 95% confidence (z = 1.959963984540054).
WilsonInterval wilson_interval(long failures, long trials);

TrialRecord run_trial(const ExperimentConfig& config, double p_cnot,
                      long shot);

// Runs config.shots accepted shots at one p value, sharding shot indices
// across config.threads workers.  Aggregation is integer sums keyed by shot
// index, so the result is bit-identical for any thread count.
RatePoint estimate_rate(const ExperimentConfig& config, double p_cnot);

// estimate_rate over every p in config.p_cnot, in order.
std::vector<RatePoint> estimate_rates(const ExperimentConfig& config);

struct OverheadPoint {
  double p_cnot;
  double mean_attempts;
  double mean_l1preps;
};

// Postselection cost per accepted preparation across config.p_cnot.
std::vector<OverheadPoint> overhead_curve(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Exhaustive fault-injection audit.
// ---------------------------------------------------------------------------

// One planned fault set pushed through a single preparation attempt on the
// frame backend.  `detected` means an EDT flagged the attempt (postselection
// would discard and retry it); an undetected attempt is measured and decoded.
struct FaultCaseOutcome {
  bool detected = false;
  bool failed = false;  // undetected and decoded to logical -1
};

FaultCaseOutcome run_fault_case(concat::EdtMode mode,
                                std::span<const FaultEvent> faults,
                                Decoder decoder, double p_e);

// Fault sets that slip past detection and still flip the logical qubit are
// recorded up to this cap; the counters stay exact regardless.
inline constexpr std::size_t kMaxFailingRecords = 10000;

struct FaultSweep {
  std::uint64_t cases = 0;
  std::uint64_t detected = 0;
  std::uint64_t accepted = 0;
  std::uint64_t logical_failures = 0;
  std::vector<std::vector<FaultEvent>> failing;
};

// Sweeps every weight-k CNOT fault combination of one preparation attempt of
// `mode` (lexicographic order), or `samples` uniformly random combinations
// when samples > 0.  Fault locations are CNOT ordinals within the attempt.
FaultSweep fault_sweep(concat::EdtMode mode, int k, Decoder decoder,
                       double p_e, std::uint64_t samples = 0,
                       std::uint64_t seed = 1);

struct FitResult {
  double exponent = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;  // RMS residual in log p_L
  int points_used = 0;
  std::vector<double> excluded_p;  // zero-failure points left out of the fit
};

// Least-squares power-law fit p_L = prefactor * p^exponent over the points
// with failures > 0.  Throws std::runtime_error given fewer than two usable
// points.
FitResult fit_exponent(std::span<const RatePoint> points);

// CSV round-trip, header `p_cnot,trials,failures,p_l,ci_lo,ci_hi,
// mean_attempts,mean_l1preps`.
std::string rate_points_to_csv(std::span<const RatePoint> points);
std::vector<RatePoint> rate_points_from_csv(const std::string& csv);

// Full-reproducibility record: config, code version, and results.
nlohmann::json experiment_manifest(const ExperimentConfig& config,
                                   std::span<const RatePoint> points,
                                   double elapsed_seconds);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mc
}  // namespace surfenc

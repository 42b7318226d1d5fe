#include "surfenc/montecarlo.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace surfenc {
namespace mc {

namespace {

// rng stream tags; FAULTS must be identical between backends, MEAS is only
// consumed by the tableau backend.
constexpr std::uint64_t kTagFaults = 0x6661756c74ULL;  // "fault"
constexpr std::uint64_t kTagMeas = 0x6d656173ULL;      // "meas"

constexpr double kZ95 = 1.959963984540054;

void decode_register(const std::array<std::uint16_t, 9>& masks,
                     Decoder decoder, double p_e, TrialRecord& rec) {
  std::uint16_t outer_neg = 0;
  for (int b = 0; b < 9; ++b) {
    rec.block_syndromes[b] = surf9::z_syndrome_bits(masks[b]);
    rec.block_hard_values[b] = surf9::hard_decode_logical(masks[b]);
    if (rec.block_hard_values[b] < 0) {
      outer_neg |= static_cast<std::uint16_t>(1u << b);
    }
  }
  if (decoder == Decoder::kHard) {
    rec.verdict = surf9::hard_decode_logical(outer_neg);
  } else {
    std::array<Posterior, 9> priors;
    for (int b = 0; b < 9; ++b) {
      priors[b] = softdec::level1_posterior_mask(masks[b], p_e);
    }
    const auto decision = softdec::level2_decode(priors);
    rec.posterior_plus = decision.posterior.p_plus;
    rec.verdict = decision.verdict;
  }
  rec.failed = rec.verdict < 0;
}

template <class Engine>
TrialRecord run_trial_engine(Engine& eng, const ExperimentConfig& config,
                             double p_cnot, long shot) {
  TrialRecord rec;
  rec.shot = shot;
  rec.p_cnot = p_cnot;
  SplitRng fault_rng(config.seed, static_cast<std::uint64_t>(shot), kTagFaults);
  concat::BernoulliFaults faults{p_cnot, &fault_rng};
  while (true) {
    ++rec.attempts;
    concat::AttemptResult r =
        concat::run_attempt(eng, config.mode, faults, &rec.level1_preps);
    if (r.detected) continue;
    concat::measure_register(eng, r);
    rec.block_masks = r.block_neg_masks;
    break;
  }
  decode_register(rec.block_masks, config.decoder, config.p_e, rec);
  return rec;
}

}  // namespace

const char* decoder_name(Decoder d) {
  return d == Decoder::kHard ? "hard" : "soft";
}

Decoder decoder_from_name(const std::string& name) {
  if (name == "hard") return Decoder::kHard;
  if (name == "soft") return Decoder::kSoft;
  throw std::invalid_argument("decoder_from_name: expected hard/soft, got '" +
                              name + "'");
}

const char* backend_name(Backend b) {
  return b == Backend::kFrame ? "frame" : "tableau";
}

Backend backend_from_name(const std::string& name) {
  if (name == "frame") return Backend::kFrame;
  if (name == "tableau") return Backend::kTableau;
  throw std::invalid_argument(
      "backend_from_name: expected frame/tableau, got '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (shots < 1) throw std::invalid_argument("config: shots must be >= 1");
  if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
  if (p_cnot.empty()) {
    throw std::invalid_argument("config: need at least one p_cnot");
  }
  for (const double p : p_cnot) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("config: p_cnot must be in [0,1]");
    }
  }
  if (!(p_e > 0.0 && p_e < 0.5)) {
    throw std::invalid_argument("config: p_e must be in (0, 0.5)");
  }
}

WilsonInterval wilson_interval(long failures, long trials) {
  if (trials < 1 || failures < 0 || failures > trials) {
    throw std::invalid_argument("wilson_interval: bad counts");
  }
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(failures) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      (kZ95 / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
  // At the degenerate edges the bound coincides with the observation; pin it
  // so downstream exact-zero comparisons are safe against rounding dust.
  if (failures == 0) w.lo = 0.0;
  if (failures == trials) w.hi = 1.0;
  return w;
}

TrialRecord run_trial(const ExperimentConfig& config, double p_cnot,
                      long shot) {
  config.validate();
  if (config.backend == Backend::kFrame) {
    concat::FrameEngine eng;
    return run_trial_engine(eng, config, p_cnot, shot);
  }
  concat::TableauEngine eng(
      SplitRng(config.seed, static_cast<std::uint64_t>(shot), kTagMeas));
  return run_trial_engine(eng, config, p_cnot, shot);
}

RatePoint estimate_rate(const ExperimentConfig& config, double p_cnot) {
  config.validate();
  struct Partial {
    long failures = 0;
    long attempts = 0;
    long l1preps = 0;
  };
  std::atomic<long> next_chunk{0};
  constexpr long kChunk = 1024;
  const long shots = config.shots;
  const int workers = config.threads;
  std::vector<Partial> partials(workers);

  auto work = [&](int widx) {
    Partial& p = partials[widx];
    while (true) {
      const long chunk = next_chunk.fetch_add(1);
      const long begin = chunk * kChunk;
      if (begin >= shots) return;
      const long end = std::min(begin + kChunk, shots);
      if (config.backend == Backend::kFrame) {
        concat::FrameEngine eng;
        for (long s = begin; s < end; ++s) {
          const TrialRecord rec = run_trial_engine(eng, config, p_cnot, s);
          p.failures += rec.failed ? 1 : 0;
          p.attempts += rec.attempts;
          p.l1preps += rec.level1_preps;
        }
      } else {
        for (long s = begin; s < end; ++s) {
          concat::TableauEngine eng(
              SplitRng(config.seed, static_cast<std::uint64_t>(s), kTagMeas));
          const TrialRecord rec = run_trial_engine(eng, config, p_cnot, s);
          p.failures += rec.failed ? 1 : 0;
          p.attempts += rec.attempts;
          p.l1preps += rec.level1_preps;
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  Partial total;
  for (const auto& p : partials) {
    total.failures += p.failures;
    total.attempts += p.attempts;
    total.l1preps += p.l1preps;
  }
  RatePoint point;
  point.p_cnot = p_cnot;
  point.trials = shots;
  point.failures = total.failures;
  point.p_l = static_cast<double>(total.failures) / static_cast<double>(shots);
  const auto ci = wilson_interval(total.failures, shots);
  point.ci_lo = ci.lo;
  point.ci_hi = ci.hi;
  point.mean_attempts =
      static_cast<double>(total.attempts) / static_cast<double>(shots);
  point.mean_l1preps =
      static_cast<double>(total.l1preps) / static_cast<double>(shots);
  return point;
}

std::vector<RatePoint> estimate_rates(const ExperimentConfig& config) {
  std::vector<RatePoint> out;
  out.reserve(config.p_cnot.size());
  for (const double p : config.p_cnot) out.push_back(estimate_rate(config, p));
  return out;
}

std::vector<OverheadPoint> overhead_curve(const ExperimentConfig& config) {
  std::vector<OverheadPoint> out;
  for (const auto& point : estimate_rates(config)) {
    out.push_back({point.p_cnot, point.mean_attempts, point.mean_l1preps});
  }
  return out;
}

namespace {

FaultCaseOutcome run_fault_case_engine(concat::FrameEngine& eng,
                                       concat::EdtMode mode,
                                       std::span<const FaultEvent> faults,
                                       Decoder decoder, double p_e) {
  concat::PlannedFaults planned{faults};
  long preps = 0;
  concat::AttemptResult r = concat::run_attempt(eng, mode, planned, &preps);
  FaultCaseOutcome out;
  out.detected = r.detected;
  if (!r.detected) {
    concat::measure_register(eng, r);
    TrialRecord rec;
    decode_register(r.block_neg_masks, decoder, p_e, rec);
    out.failed = rec.failed;
  }
  return out;
}

}  // namespace

FaultCaseOutcome run_fault_case(concat::EdtMode mode,
                                std::span<const FaultEvent> faults,
                                Decoder decoder, double p_e) {
  concat::FrameEngine eng;
  return run_fault_case_engine(eng, mode, faults, decoder, p_e);
}

FaultSweep fault_sweep(concat::EdtMode mode, int k, Decoder decoder,
                       double p_e, std::uint64_t samples, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("fault_sweep: k must be >= 0");
  const int n = concat::num_cnots(mode);
  FaultSweep sweep;
  concat::FrameEngine eng;
  auto run_one = [&](const std::vector<FaultEvent>& f) {
    const auto o = run_fault_case_engine(eng, mode, f, decoder, p_e);
    ++sweep.cases;
    if (o.detected) {
      ++sweep.detected;
      return;
    }
    ++sweep.accepted;
    if (o.failed) {
      ++sweep.logical_failures;
      if (sweep.failing.size() < kMaxFailingRecords) sweep.failing.push_back(f);
    }
  };
  if (samples > 0) {
    SplitRng rng(seed, 0, 0x73616d70ULL);  // "samp"
    for (std::uint64_t i = 0; i < samples; ++i) {
      run_one(sample_weight_k_faults(n, k, rng));
    }
  } else {
    FaultEnumerator enumerator(n, k);
    std::vector<FaultEvent> combo;
    const std::uint64_t total = enumerator.size();
    for (std::uint64_t i = 0; i < total; ++i) {
      enumerator.combination(i, &combo);
      run_one(combo);
    }
  }
  return sweep;
}

FitResult fit_exponent(std::span<const RatePoint> points) {
  FitResult fit;
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (p.failures <= 0) {
      fit.excluded_p.push_back(p.p_cnot);
      continue;
    }
    if (!(p.p_cnot > 0.0)) {
      throw std::invalid_argument("fit_exponent: p_cnot must be positive");
    }
    xs.push_back(std::log(p.p_cnot));
    ys.push_back(std::log(p.p_l));
  }
  if (xs.size() < 2) {
    throw std::runtime_error(
        "fit_exponent: fewer than two points with nonzero failures");
  }
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) {
    throw std::runtime_error("fit_exponent: degenerate abscissae");
  }
  fit.exponent = (n * sxy - sx * sy) / det;
  const double intercept = (sy - fit.exponent * sx) / n;
  fit.prefactor = std::exp(intercept);
  double ss = 0;
  for (int i = 0; i < n; ++i) {
    const double r = ys[i] - (intercept + fit.exponent * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.points_used = n;
  return fit;
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

std::string rate_points_to_csv(std::span<const RatePoint> points) {
  std::ostringstream out;
  out << "p_cnot,trials,failures,p_l,ci_lo,ci_hi,mean_attempts,mean_l1preps\n";
  for (const auto& p : points) {
    out << fmt_double(p.p_cnot) << ',' << p.trials << ',' << p.failures << ','
        << fmt_double(p.p_l) << ',' << fmt_double(p.ci_lo) << ','
        << fmt_double(p.ci_hi) << ',' << fmt_double(p.mean_attempts) << ','
        << fmt_double(p.mean_l1preps) << '\n';
  }
  return out.str();
}

std::vector<RatePoint> rate_points_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line.find("p_cnot") == std::string::npos) {
    throw std::invalid_argument("rate_points_from_csv: missing header");
  }
  std::vector<RatePoint> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> cols;
    while (std::getline(ls, tok, ',')) cols.push_back(tok);
    if (cols.size() != 8) {
      throw std::invalid_argument("rate_points_from_csv: bad row at line " +
                                  std::to_string(line_no));
    }
    try {
      RatePoint p;
      p.p_cnot = std::stod(cols[0]);
      p.trials = std::stol(cols[1]);
      p.failures = std::stol(cols[2]);
      p.p_l = std::stod(cols[3]);
      p.ci_lo = std::stod(cols[4]);
      p.ci_hi = std::stod(cols[5]);
      p.mean_attempts = std::stod(cols[6]);
      p.mean_l1preps = std::stod(cols[7]);
      out.push_back(p);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("rate_points_from_csv: bad value at line " +
                                  std::to_string(line_no));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("rate_points_from_csv: bad value at line " +
                                  std::to_string(line_no));
    }
  }
  return out;
}

nlohmann::json trial_to_json(const TrialRecord& r) {
  nlohmann::json j;
  j["shot"] = r.shot;
  j["p_cnot"] = r.p_cnot;
  j["attempts"] = r.attempts;
  j["level1_preps"] = r.level1_preps;
  j["block_masks"] = r.block_masks;
  j["block_syndromes"] = r.block_syndromes;
  j["block_hard_values"] = r.block_hard_values;
  j["posterior_plus"] = r.posterior_plus;
  j["verdict"] = r.verdict;
  j["failed"] = r.failed;
  return j;
}

nlohmann::json experiment_manifest(const ExperimentConfig& config,
                                   std::span<const RatePoint> points,
                                   double elapsed_seconds) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["seed"] = config.seed;
  j["shots"] = config.shots;
  j["edt"] = concat::edt_mode_name(config.mode);
  j["decoder"] = decoder_name(config.decoder);
  j["backend"] = backend_name(config.backend);
  j["p_e"] = config.p_e;
  j["threads"] = config.threads;
  j["p_cnot"] = config.p_cnot;
  j["elapsed_seconds"] = elapsed_seconds;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points) {
    pts.push_back({{"p_cnot", p.p_cnot},
                   {"trials", p.trials},
                   {"failures", p.failures},
                   {"p_l", p.p_l},
                   {"ci_lo", p.ci_lo},
                   {"ci_hi", p.ci_hi},
                   {"mean_attempts", p.mean_attempts},
                   {"mean_l1preps", p.mean_l1preps}});
  }
  j["points"] = pts;
  return j;
}

}  // namespace mc
}  // namespace surfenc

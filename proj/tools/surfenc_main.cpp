// surfenc: command-line front end for the nine-qubit surface-code encoding
// laboratory.  Every subcommand prints machine-readable output (JSON or CSV)
// by default; --human switches to a short prose summary.

#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfenc/circuit.hpp"
#include "surfenc/concat.hpp"
#include "surfenc/montecarlo.hpp"
#include "surfenc/noise.hpp"
#include "surfenc/schedule.hpp"
#include "surfenc/shots.hpp"
#include "surfenc/surface9.hpp"
#include "surfenc/tableau.hpp"

namespace {

using namespace surfenc;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// "I", "X1", "X2X3", ... for an X-type correction mask.
std::string x_mask_label(std::uint16_t mask) {
  if (mask == 0) return "I";
  std::string out;
  for (int q = 0; q < 9; ++q) {
    if (mask & (1u << q)) {
      out += 'X';
      out += static_cast<char>('1' + q);
    }
  }
  return out;
}

PauliString widen(const PauliString& g, int n) {
  PauliString out(n);
  for (int q = 0; q < g.n; ++q) {
    if (g.x_bit(q)) out.toggle_x(q);
    if (g.z_bit(q)) out.toggle_z(q);
  }
  out.phase = g.phase;
  return out;
}

// ---------------------------------------------------------------------------
// encode-check
// ---------------------------------------------------------------------------

int cmd_encode_check(bool human) {
  json report;
  bool pass = true;

  // The level-1 encoding circuit must stabilize the expected generator set
  // and the logical Z.
  {
    StabilizerTableau t(9);
    SplitRng rng(1, 0, 0);
    run_circuit(t, surf9::encoding_circuit(), rng);
    bool ok = true;
    for (const auto& g : surf9::final_generators()) {
      ok = ok && t.expectation(g) == +1;
    }
    ok = ok && t.expectation(pauli_from_label("+Z1Z2Z3", 9)) == +1;
    report["level1_encoder"] = ok ? "ok" : "mismatch";
    pass = pass && ok;
  }

  // Every syndrome's stored correction must reproduce the syndrome and be of
  // minimal weight.
  {
    bool ok = true;
    for (int s = 0; s < 16; ++s) {
      const std::uint16_t c = surf9::kCorrectionTable[s];
      ok = ok && surf9::z_syndrome_bits(c) == s;
      ok = ok && std::popcount(static_cast<unsigned>(c)) ==
                     std::popcount(static_cast<unsigned>(
                         surf9::brute_force_correction(s)));
    }
    report["correction_table"] = ok ? "ok" : "mismatch";
    pass = pass && ok;
  }

  // A noiseless level-2 preparation must take exactly one attempt and leave
  // the register in the full 81-generator stabilizer group, for every
  // teleportation configuration.
  {
    json modes;
    for (const auto mode :
         {concat::EdtMode::kNone, concat::EdtMode::kEdt5,
          concat::EdtMode::kEdt28, concat::EdtMode::kEdt258}) {
      concat::TableauEngine eng(SplitRng(7, 0, 0x636c69));
      SplitRng fault_rng(7, 1, 0x636c69);
      const auto outcome =
          concat::prepare_logical_zero_l2(eng, mode, NoiseModel(0.0), fault_rng);
      bool ok = outcome.attempts == 1;
      const int n = eng.tableau().num_qubits();
      for (const auto& g : concat::logical_zero_l2_generators(mode)) {
        ok = ok && eng.tableau().expectation(widen(g, n)) == +1;
      }
      modes[concat::edt_mode_name(mode)] = ok ? "ok" : "mismatch";
      pass = pass && ok;
    }
    report["level2_preparation"] = modes;
  }

  report["pass"] = pass;
  if (human) {
    std::cout << "level-1 encoder:      " << report["level1_encoder"].get<std::string>() << "\n"
              << "correction table:     " << report["correction_table"].get<std::string>() << "\n";
    for (const auto& [name, status] : report["level2_preparation"].items()) {
      std::cout << "level-2 prep (" << name << "):"
                << std::string(name.size() < 5 ? 5 - name.size() : 1, ' ')
                << status.get<std::string>() << "\n";
    }
    std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decode-table
// ---------------------------------------------------------------------------

int cmd_decode_table(bool csv, bool human) {
  if (human) {
    std::cout << "syndrome (s1 s2 s3 s4) -> correction\n";
    for (int s = 0; s < 16; ++s) {
      std::cout << "  " << (s & 1) << ' ' << ((s >> 1) & 1) << ' '
                << ((s >> 2) & 1) << ' ' << ((s >> 3) & 1) << "  ->  "
                << x_mask_label(surf9::kCorrectionTable[s]) << "\n";
    }
    return 0;
  }
  if (csv) {
    std::cout << "s1,s2,s3,s4,correction,weight\n";
    for (int s = 0; s < 16; ++s) {
      const std::uint16_t c = surf9::kCorrectionTable[s];
      std::cout << (s & 1) << ',' << ((s >> 1) & 1) << ',' << ((s >> 2) & 1)
                << ',' << ((s >> 3) & 1) << ',' << x_mask_label(c) << ','
                << std::popcount(static_cast<unsigned>(c)) << "\n";
    }
    return 0;
  }
  json rows = json::array();
  for (int s = 0; s < 16; ++s) {
    const std::uint16_t c = surf9::kCorrectionTable[s];
    rows.push_back({{"s1", s & 1},
                    {"s2", (s >> 1) & 1},
                    {"s3", (s >> 2) & 1},
                    {"s4", (s >> 3) & 1},
                    {"syndrome", s},
                    {"correction", x_mask_label(c)},
                    {"weight", std::popcount(static_cast<unsigned>(c))}});
  }
  std::cout << json{{"rows", rows}}.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::vector<double> p;
  long shots = 0;
  std::string edt = "none";
  std::string decoder = "soft";
  std::string backend = "frame";
  double p_e = 0.01;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
  std::string manifest;
  bool human = false;
};

int cmd_simulate(const SimulateArgs& a) {
  mc::ExperimentConfig cfg;
  cfg.p_cnot = a.p;
  cfg.shots = a.shots;
  cfg.mode = concat::edt_mode_from_name(a.edt);
  cfg.decoder = mc::decoder_from_name(a.decoder);
  cfg.backend = mc::backend_from_name(a.backend);
  cfg.p_e = a.p_e;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  cfg.validate();

  const auto t0 = std::chrono::steady_clock::now();
  const auto points = mc::estimate_rates(cfg);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  const std::string csv = mc::rate_points_to_csv(points);
  if (!a.out.empty()) write_file(a.out, csv);
  if (!a.manifest.empty()) {
    write_file(a.manifest,
               mc::experiment_manifest(cfg, points, elapsed).dump(2) + "\n");
  }
  if (a.human) {
    std::cout << "edt=" << a.edt << " decoder=" << a.decoder
              << " backend=" << a.backend << " shots=" << a.shots
              << " seed=" << a.seed << "\n";
    for (const auto& pt : points) {
      std::cout << "  p=" << pt.p_cnot << ": p_L=" << pt.p_l << "  ["
                << pt.ci_lo << ", " << pt.ci_hi << "]  failures="
                << pt.failures << "/" << pt.trials
                << "  attempts/shot=" << pt.mean_attempts
                << "  block-preps/shot=" << pt.mean_l1preps << "\n";
    }
    std::cout << "elapsed " << elapsed << " s\n";
    if (!a.out.empty()) std::cout << "rates written to " << a.out << "\n";
    if (!a.manifest.empty()) {
      std::cout << "manifest written to " << a.manifest << "\n";
    }
  } else if (a.out.empty()) {
    std::cout << csv;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// faults
// ---------------------------------------------------------------------------

struct FaultsArgs {
  int k = 1;
  std::string edt = "258";
  std::string decoder = "soft";
  double p_e = 0.01;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string failing;
  bool human = false;
};

int cmd_faults(const FaultsArgs& a) {
  if (a.k < 0 || (a.samples == 0 && a.k > 2)) {
    throw std::invalid_argument(
        "faults: exhaustive sweeps support k in {0,1,2}; pass --samples for "
        "higher weights");
  }
  const auto mode = concat::edt_mode_from_name(a.edt);
  const auto decoder = mc::decoder_from_name(a.decoder);
  const auto t0 = std::chrono::steady_clock::now();
  const auto sweep =
      mc::fault_sweep(mode, a.k, decoder, a.p_e, a.samples, a.seed);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  if (!a.failing.empty()) {
    std::ostringstream out;
    out << "case,event_index,pauli_label\n";
    for (std::size_t i = 0; i < sweep.failing.size(); ++i) {
      for (const auto& f : sweep.failing[i]) {
        out << i << ',' << f.event_index << ','
            << two_qubit_pauli_label(f.pauli) << '\n';
      }
    }
    write_file(a.failing, out.str());
  }

  json j{{"edt", a.edt},
         {"k", a.k},
         {"decoder", a.decoder},
         {"p_e", a.p_e},
         {"num_cnots", concat::num_cnots(mode)},
         {"cases", sweep.cases},
         {"detected", sweep.detected},
         {"accepted", sweep.accepted},
         {"logical_failures", sweep.logical_failures},
         {"elapsed_seconds", elapsed}};
  if (a.samples > 0) j["samples"] = a.samples;
  if (a.human) {
    std::cout << "weight-" << a.k << " fault sweep, edt=" << a.edt
              << ", decoder=" << a.decoder << "\n"
              << "  cases:            " << sweep.cases << "\n"
              << "  detected:         " << sweep.detected << "\n"
              << "  accepted:         " << sweep.accepted << "\n"
              << "  logical failures: " << sweep.logical_failures << "\n"
              << "  elapsed:          " << elapsed << " s\n";
    if (!a.failing.empty()) {
      std::cout << "failing sets written to " << a.failing << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

int cmd_fit(const std::string& path, bool human) {
  const auto points = mc::rate_points_from_csv(read_file(path));
  const auto fit = mc::fit_exponent(points);
  if (human) {
    std::cout << "p_L ~ " << fit.prefactor << " * p^" << fit.exponent
              << "  (rms log residual " << fit.residual << ", "
              << fit.points_used << " points";
    if (!fit.excluded_p.empty()) {
      std::cout << ", " << fit.excluded_p.size() << " zero-failure excluded";
    }
    std::cout << ")\n";
  } else {
    std::cout << json{{"exponent", fit.exponent},
                      {"prefactor", fit.prefactor},
                      {"residual", fit.residual},
                      {"points_used", fit.points_used},
                      {"excluded_p", fit.excluded_p}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& z_path, const std::string& x_path,
                bool human) {
  const auto z = shots::dataset_from_csv(read_file(z_path));
  const auto x = shots::dataset_from_csv(read_file(x_path));
  const auto a = shots::analyze_shots(z, x);
  if (human) {
    std::cout << "Z rows: " << a.z_rows << ", X rows: " << a.x_rows << "\n"
              << "logical error rate (decoded):       " << a.p_l << "\n"
              << "trivial-syndrome Z_L=+1 fraction:   " << a.p_z << "\n"
              << "all-X-parities-positive fraction:   " << a.p_x << "\n"
              << "fidelity lower bound (p_z + p_x - 1): " << a.fidelity_bound
              << "\n";
  } else {
    std::cout << json{{"p_l", a.p_l},
                      {"p_z", a.p_z},
                      {"p_x", a.p_x},
                      {"fidelity_bound", a.fidelity_bound},
                      {"z_rows", a.z_rows},
                      {"x_rows", a.x_rows}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

int cmd_export(const std::string& what, const std::string& edt, int cycles,
               const std::string& out, bool human) {
  std::string content;
  if (what == "l1") {
    content = to_text(surf9::encoding_circuit());
  } else if (what == "l2") {
    content = to_text(concat::level2_circuit(concat::edt_mode_from_name(edt)));
  } else if (what == "dd") {
    content = dd::schedule_to_csv(dd::dd_schedule(cycles));
  } else {
    throw std::invalid_argument("export: --what must be l1, l2, or dd");
  }
  write_file(out, content);
  if (human) {
    std::cout << "wrote " << what << " (" << content.size() << " bytes) to "
              << out << "\n";
  } else {
    std::cout << json{{"what", what}, {"path", out}, {"bytes", content.size()}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "surfenc: simulation and decoding laboratory for measurement-free "
      "logical-zero encoding of the distance-three nine-qubit surface code"};
  app.require_subcommand(1);

  // encode-check
  bool ec_human = false;
  auto* ec = app.add_subcommand(
      "encode-check", "verify the encoder and decoder against built-in goldens");
  ec->add_flag("--human", ec_human, "prose summary instead of JSON");

  // decode-table
  bool dt_csv = false, dt_human = false;
  auto* dt = app.add_subcommand("decode-table",
                                "print the syndrome-to-correction lookup table");
  dt->add_flag("--csv", dt_csv, "CSV instead of JSON");
  dt->add_flag("--human", dt_human, "prose table");

  // simulate
  SimulateArgs sim;
  auto* sm = app.add_subcommand(
      "simulate", "Monte-Carlo logical error rates of the full preparation");
  sm->add_option("--p", sim.p, "physical CNOT error rates")
      ->required()
      ->delimiter(',');
  sm->add_option("--shots", sim.shots, "accepted preparations per rate")
      ->required();
  sm->add_option("--edt", sim.edt, "teleportation config: none, 5, 28, 258")
      ->capture_default_str();
  sm->add_option("--decoder", sim.decoder, "hard or soft")
      ->capture_default_str();
  sm->add_option("--backend", sim.backend, "frame or tableau")
      ->capture_default_str();
  sm->add_option("--pe", sim.p_e, "readout-error prior of the soft decoder")
      ->capture_default_str();
  sm->add_option("--seed", sim.seed, "rng seed")->capture_default_str();
  sm->add_option("--threads", sim.threads, "worker threads")
      ->capture_default_str();
  sm->add_option("--out", sim.out, "write the rate CSV here");
  sm->add_option("--manifest", sim.manifest,
                 "write a reproducibility manifest (JSON) here");
  sm->add_flag("--human", sim.human, "prose summary");

  // faults
  FaultsArgs fl;
  auto* fa = app.add_subcommand(
      "faults", "exhaustive (or sampled) weight-k fault-injection audit");
  fa->add_option("--k", fl.k, "faults per case")->capture_default_str();
  fa->add_option("--edt", fl.edt, "teleportation config: none, 5, 28, 258")
      ->capture_default_str();
  fa->add_option("--decoder", fl.decoder, "hard or soft")
      ->capture_default_str();
  fa->add_option("--pe", fl.p_e, "readout-error prior of the soft decoder")
      ->capture_default_str();
  fa->add_option("--samples", fl.samples,
                 "sample this many cases instead of enumerating all");
  fa->add_option("--seed", fl.seed, "rng seed for --samples")
      ->capture_default_str();
  fa->add_option("--failing", fl.failing,
                 "write undetected-and-failing fault sets here (CSV)");
  fa->add_flag("--human", fl.human, "prose summary");

  // fit
  std::string fit_path;
  bool fit_human = false;
  auto* ft = app.add_subcommand("fit", "power-law fit of a rate CSV");
  ft->add_option("csv", fit_path, "rate CSV from `simulate`")->required();
  ft->add_flag("--human", fit_human, "prose summary");

  // analyze
  std::string an_z, an_x;
  bool an_human = false;
  auto* an = app.add_subcommand(
      "analyze", "joint Z/X readout analysis with a fidelity lower bound");
  an->add_option("--z", an_z, "Z-basis shot CSV")->required();
  an->add_option("--x", an_x, "X-basis shot CSV")->required();
  an->add_flag("--human", an_human, "prose summary");

  // export
  std::string ex_what, ex_edt = "258", ex_out;
  int ex_cycles = 1;
  bool ex_human = false;
  auto* ex = app.add_subcommand(
      "export", "write a circuit (text) or decoupling schedule (CSV)");
  ex->add_option("--what", ex_what, "l1, l2, or dd")->required();
  ex->add_option("--edt", ex_edt, "teleportation config for --what l2")
      ->capture_default_str();
  ex->add_option("--cycles", ex_cycles, "cycle count for --what dd")
      ->capture_default_str();
  ex->add_option("--out", ex_out, "output path")->required();
  ex->add_flag("--human", ex_human, "prose confirmation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ec->parsed()) return cmd_encode_check(ec_human);
    if (dt->parsed()) return cmd_decode_table(dt_csv, dt_human);
    if (sm->parsed()) return cmd_simulate(sim);
    if (fa->parsed()) return cmd_faults(fl);
    if (ft->parsed()) return cmd_fit(fit_path, fit_human);
    if (an->parsed()) return cmd_analyze(an_z, an_x, an_human);
    if (ex->parsed()) return cmd_export(ex_what, ex_edt, ex_cycles, ex_out,
                                        ex_human);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "surfenc/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surfenc {
namespace dd {

TimedSchedule dd_schedule(int cycles, int qubits) {
  if (cycles < 1) throw std::invalid_argument("dd_schedule: cycles must be >= 1");
  if (qubits < 1) throw std::invalid_argument("dd_schedule: qubits must be >= 1");
  TimedSchedule s;
  s.cycles = cycles;
  s.qubits = qubits;
  for (int q = 0; q < qubits; ++q) {
    // 1-based chain position parity decides the flip intervals.
    const bool odd_position = (q % 2) == 0;
    std::int64_t t = 0;
    for (int cycle = 0; cycle < cycles; ++cycle) {
      for (int interval = 1; interval <= 4; ++interval) {
        const bool flip =
            odd_position ? (interval == 1 || interval == 3)
                         : (interval == 2 || interval == 4);
        if (flip) {
          s.ops.push_back({t, kDelayTicks, OpKind::kDelay, q});
          s.ops.push_back({t + kDelayTicks, kXTicks, OpKind::kX, q});
        } else {
          s.ops.push_back({t, kIntervalTicks, OpKind::kDelay, q});
        }
        t += kIntervalTicks;
      }
    }
  }
  return s;
}

namespace {

// Times (ticks) at which the given qubit's sign flips: the end of each of
// its X pulses.
std::vector<std::int64_t> flip_times(const TimedSchedule& s, int qubit) {
  std::vector<std::int64_t> out;
  for (const auto& op : s.ops) {
    if (op.qubit == qubit && op.kind == OpKind::kX) {
      out.push_back(op.start_ticks + op.duration_ticks);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sign_at(const std::vector<std::int64_t>& flips, std::int64_t t) {
  // Number of flips at or before t decides the sign (flip takes effect at
  // the pulse's end instant).
  const auto n = std::upper_bound(flips.begin(), flips.end(), t) - flips.begin();
  return (n & 1) ? -1 : +1;
}

}  // namespace

std::int64_t phase_sum_single(const TimedSchedule& s, int qubit) {
  if (qubit < 0 || qubit >= s.qubits) {
    throw std::invalid_argument("phase_sum_single: qubit out of range");
  }
  const auto flips = flip_times(s, qubit);
  std::int64_t sum = 0;
  std::int64_t prev = 0;
  int sign = +1;
  for (const auto f : flips) {
    sum += sign * (f - prev);
    prev = f;
    sign = -sign;
  }
  sum += sign * (s.total_ticks() - prev);
  return sum;
}

std::int64_t phase_sum_pair(const TimedSchedule& s, int qubit_a, int qubit_b) {
  if (qubit_a < 0 || qubit_a >= s.qubits || qubit_b < 0 ||
      qubit_b >= s.qubits || qubit_a == qubit_b) {
    throw std::invalid_argument("phase_sum_pair: bad qubit pair");
  }
  const auto fa = flip_times(s, qubit_a);
  const auto fb = flip_times(s, qubit_b);
  std::vector<std::int64_t> cuts;
  cuts.reserve(fa.size() + fb.size() + 1);
  cuts.insert(cuts.end(), fa.begin(), fa.end());
  cuts.insert(cuts.end(), fb.begin(), fb.end());
  cuts.push_back(s.total_ticks());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::int64_t sum = 0;
  std::int64_t prev = 0;
  for (const auto c : cuts) {
    if (c > prev) {
      // Piecewise-constant product of signs over [prev, c).
      sum += static_cast<std::int64_t>(sign_at(fa, prev) * sign_at(fb, prev)) *
             (c - prev);
      prev = c;
    }
  }
  return sum;
}

std::string schedule_to_csv(const TimedSchedule& s) {
  std::ostringstream out;
  out << "{\"cycles\":" << s.cycles << ",\"qubits\":" << s.qubits
      << ",\"cycle_ns\":2147.6,\"delay_ns\":501.3,\"x_ns\":35.6}\n";
  out << "start_ns,duration_ns,op,qubit\n";
  for (const auto& op : s.ops) {
    const auto ns = [](std::int64_t ticks) {
      std::ostringstream v;
      v << ticks / 10 << '.' << ticks % 10;
      return v.str();
    };
    out << ns(op.start_ticks) << ',' << ns(op.duration_ticks) << ','
        << (op.kind == OpKind::kX ? "X" : "DELAY") << ',' << op.qubit + 1
        << '\n';
  }
  return out.str();
}

}  // namespace dd
}  // namespace surfenc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace surfenc {
namespace dd {

// All times are integer ticks of 0.1 ns so the cancellation sums are exact:
// delay 501.3 ns = 5013 ticks, X gate 35.6 ns = 356 ticks, interval
// 536.9 ns = 5369 ticks, cycle 4 intervals = 2147.6 ns = 21476 ticks.
inline constexpr std::int64_t kDelayTicks = 5013;
inline constexpr std::int64_t kXTicks = 356;
inline constexpr std::int64_t kIntervalTicks = kDelayTicks + kXTicks;
inline constexpr std::int64_t kCycleTicks = 4 * kIntervalTicks;

enum class OpKind { kDelay, kX };

struct ScheduledOp {
  std::int64_t start_ticks;
  std::int64_t duration_ticks;
  OpKind kind;
  int qubit;  // 0-based

  double start_ns() const { return static_cast<double>(start_ticks) / 10.0; }
  double duration_ns() const {
    return static_cast<double>(duration_ticks) / 10.0;
  }
};

struct TimedSchedule {
  std::vector<ScheduledOp> ops;  // time-ordered per qubit
  int cycles = 0;
  int qubits = 0;

  std::int64_t total_ticks() const { return kCycleTicks * cycles; }
};

// Dynamical-decoupling schedule on a 1-D chain: each cycle is four intervals
// of (delay, optional X); qubits at even chain position (1-based) flip after
// intervals 2 and 4, odd-position qubits after intervals 1 and 3, giving
// per-interval sign sequences (+,+,-,-) and (+,-,-,+).  Adjacent qubits thus
// always pair one sequence with the other, cancelling both single-qubit Z
// phases and neighbor ZZ phases every cycle.  Throws on cycles < 1 or
// qubits < 1.
TimedSchedule dd_schedule(int cycles, int qubits = 9);

// Signed time integrals over the whole schedule, in ticks.  The sign starts
// at +1 and flips at the end of each X pulse (the pulse itself counts with
// its pre-flip sign).  Both must be exactly zero for the emitted schedule.
std::int64_t phase_sum_single(const TimedSchedule& schedule, int qubit);
std::int64_t phase_sum_pair(const TimedSchedule& schedule, int qubit_a,
                            int qubit_b);

// CSV rendering: one-line JSON metadata header, then
// `start_ns,duration_ns,op,qubit` rows (qubits 1-based, ns with one decimal).
std::string schedule_to_csv(const TimedSchedule& schedule);

}  // namespace dd
}  // namespace surfenc

#pragma once

#include <atomic>
#include <cstdint>

namespace skinnyqr {

struct CounterSnapshot {
  std::uint64_t large_reads = 0;   // FP64 elements read from the tall-matrix store
  std::uint64_t large_writes = 0;  // FP64 elements written to it
  std::uint64_t flops = 0;         // nominal model flops (FMA = 2)
  std::uint64_t flops_actual = 0;  // flops actually executed by the kernels

  friend CounterSnapshot operator-(CounterSnapshot a, const CounterSnapshot& b) {
    a.large_reads -= b.large_reads;
    a.large_writes -= b.large_writes;
    a.flops -= b.flops;
    a.flops_actual -= b.flops_actual;
    return a;
  }
};

//! Per-operation traffic/flop tallies. Kernel authors attribute counts via
//! explicit record calls; only tall-matrix (m-proportional) traffic is ever
//! recorded, n x n work is not. Increments are atomic so parallel workers
//! can record concurrently with a deterministic total.
class TrafficCounters {
 public:
  void record_reads(std::uint64_t n) { large_reads_.fetch_add(n, std::memory_order_relaxed); }
  void record_writes(std::uint64_t n) { large_writes_.fetch_add(n, std::memory_order_relaxed); }
  void record_flops(std::uint64_t n) { flops_.fetch_add(n, std::memory_order_relaxed); }
  void record_actual_flops(std::uint64_t n) { flops_actual_.fetch_add(n, std::memory_order_relaxed); }

  void reset() {
    large_reads_.store(0, std::memory_order_relaxed);
    large_writes_.store(0, std::memory_order_relaxed);
    flops_.store(0, std::memory_order_relaxed);
    flops_actual_.store(0, std::memory_order_relaxed);
  }

  CounterSnapshot snapshot() const {
    CounterSnapshot s;
    s.large_reads = large_reads_.load(std::memory_order_relaxed);
    s.large_writes = large_writes_.load(std::memory_order_relaxed);
    s.flops = flops_.load(std::memory_order_relaxed);
    s.flops_actual = flops_actual_.load(std::memory_order_relaxed);
    return s;
  }

 private:
  std::atomic<std::uint64_t> large_reads_{0};
  std::atomic<std::uint64_t> large_writes_{0};
  std::atomic<std::uint64_t> flops_{0};
  std::atomic<std::uint64_t> flops_actual_{0};
};

//! Process-global counter instance shared by all kernels.
TrafficCounters& counters();

}  // namespace skinnyqr

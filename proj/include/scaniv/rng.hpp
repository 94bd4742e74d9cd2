#pragma once

#include <array>
#include <cstdint>

namespace scaniv {

// Counter-based pseudo-random generator (Philox4x32-10). Streams are keyed
// by a (seed, stream) pair; derive() produces a statistically independent
// child stream, so replicate r / purpose p / resample b each get their own
// stream without any draw-count coupling between consumers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Child stream obtained by mixing a salt into the stream id.
  Rng derive(std::uint64_t salt) const;

  std::uint64_t next_u64();
  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform01();
  // Standard normal via the inverse CDF (deterministic, one uniform each).
  double normal();
  // Uniform integer in [0, n), n >= 1.
  int uniform_int(int n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_;
  int block_pos_;  // next unread 32-bit word in block_, 4 = empty
};

// 64-bit finalizing mix (splitmix64); used for stream derivation and for
// hashing estimator tags into seed salts.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a hash of a byte string, for stable name-based stream salts.
std::uint64_t hash_string(const char* s);

// Inverse of the standard normal CDF, accurate to ~1e-15 (Wichura's
// PPND16 rational approximations). Throws std::domain_error outside (0,1).
double normal_quantile(double p);

}  // namespace scaniv

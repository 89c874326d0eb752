#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace cpc18 {

// splitmix64 finalizer; good avalanche, used for key mixing and seeding.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a over raw bytes; used for stream keys derived from strings and for
// artifact digests in manifests.
std::uint64_t fnv1a64(std::string_view bytes);

// xoshiro256** seeded through splitmix64. Substreams are derived by hashing
// (master seed, key path), so any unit of work owns an independent stream and
// results do not depend on scheduling order. All distribution code is local
// to this class so sequences are stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng substream(std::uint64_t master, std::initializer_list<std::uint64_t> keys);
  static std::uint64_t key(std::string_view name) { return fnv1a64(name); }

  std::uint64_t next();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Inclusive bounds, rejection sampling (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform index in [0, n); n must be >= 1.
  std::size_t index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via the Marsaglia polar method; second value cached.
  double normal();

  // Index distributed per `probs` (need not be normalized).
  std::size_t categorical(const double* probs, std::size_t n);

 private:
  std::array<std::uint64_t, 4> state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace cpc18

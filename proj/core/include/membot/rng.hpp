#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace membot {

// xoshiro256** with splitmix64 seeding. All randomness in the project flows
// through this type so that runs are reproducible bit-for-bit from a seed;
// std::normal_distribution and friends are implementation-defined and are
// deliberately avoided.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();
  // [0, 1)
  double uniform();
  double uniform(double lo, double hi);
  // Box-Muller, no cached second value (keeps the state a plain 4x u64).
  double normal();
  bool bernoulli(double p);
  // [0, n)
  int uniform_int(int n);

  // Independent stream derived from the original seed and a tag. Derivation
  // uses the seed (not the current state), so streams do not depend on how
  // much the parent has been consumed.
  Rng derive(uint64_t tag) const;
  Rng derive(std::string_view tag) const;

  uint64_t seed() const { return seed_; }
  std::array<uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<uint64_t, 4>& s) { s_ = s; }

 private:
  uint64_t seed_ = 0;
  std::array<uint64_t, 4> s_{};
};

uint64_t splitmix64(uint64_t& x);
uint64_t hash_str(std::string_view s);

}  // namespace membot

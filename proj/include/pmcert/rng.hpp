#pragma once

#include <cstdint>
#include <random>

namespace pmcert {

// Seedable, splittable random source with a fixed word-consumption contract.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the C++
// standard, seeded through std::seed_seq (also pinned). Each call to
// next_word() consumes exactly one 64-bit engine output. uniform_below(b)
// consumes one word per attempt and rejects words >= floor(2^64 / b) * b,
// so the number of consumed words is deterministic for a given seed and the
// rejection probability per attempt is below b / 2^64.
//
// split(stream) derives an independent child generator from (seed, stream)
// without touching the parent's state.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t next_word();
  std::uint64_t uniform_below(std::uint64_t bound);

  SeededRng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t words_consumed() const { return words_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t words_ = 0;
};

}  // namespace pmcert

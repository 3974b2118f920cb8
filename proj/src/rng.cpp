#include "pmcert/rng.hpp"

#include <array>
#include <limits>

#include "pmcert/errors.hpp"

namespace pmcert {

namespace {

std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

std::mt19937_64 make_engine(std::uint64_t seed) {
  std::seed_seq seq{lo32(seed), hi32(seed)};
  return std::mt19937_64(seq);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed)) {}

std::uint64_t SeededRng::next_word() {
  ++words_;
  return engine_();
}

std::uint64_t SeededRng::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidArgument("uniform_below: empty range");
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound that fits in [0, 2^64).
  const std::uint64_t excess = (kMax % bound + 1) % bound;
  const std::uint64_t limit = kMax - excess;  // accept w <= limit
  for (;;) {
    const std::uint64_t w = next_word();
    if (w <= limit) {
      return w % bound;
    }
  }
}

SeededRng SeededRng::split(std::uint64_t stream) const {
  std::seed_seq seq{lo32(seed_), hi32(seed_), lo32(stream), hi32(stream)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  const std::uint64_t child = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  return SeededRng(child);
}

}  // namespace pmcert

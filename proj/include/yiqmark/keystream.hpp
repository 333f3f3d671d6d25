#pragma once

#include <cstdint>
#include <vector>

namespace yiqmark {

// xorshift64* generator. A zero seed is remapped so the state never sticks at 0.
class PnGenerator {
 public:
  static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;

  explicit PnGenerator(std::uint64_t seed) noexcept
      : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

  std::uint64_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // +1 when the output's top bit is set, -1 otherwise.
  int next_chip() noexcept { return (next() >> 63) != 0 ? 1 : -1; }

  // Uniform on the open interval (0, 1), from the top 53 bits.
  double next_unit() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

using ChipSequence = std::vector<int>;

struct PnPair {
  ChipSequence pn0;
  ChipSequence pn1;
};

struct KeySchedule {
  std::uint64_t k1 = 15;       // drives the watermark PN sum
  std::uint64_t pn_seed = 15;  // drives the mid-band PN pair
  std::int64_t threshold = 0;
  std::uint64_t count_a = 3;   // used when sum > threshold
  std::uint64_t count_b = 5;   // used otherwise

  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;
};

// Throws InvalidParam when count_a == count_b.
void validate(const KeySchedule& ks);

ChipSequence pn_bits(std::uint64_t seed, std::size_t length);

// pn0 is the first window of `length` chips, pn1 the next window that differs.
PnPair pn_pair(std::uint64_t pn_seed, std::size_t length);

// Sum of the k1 chips selects count_a or count_b; the key P + count is reduced
// mod P, and a zero remainder is reported as P.
std::uint64_t scramble_iterations(const KeySchedule& ks, std::size_t wm_bit_count,
                                  std::uint64_t period);

}  // namespace yiqmark

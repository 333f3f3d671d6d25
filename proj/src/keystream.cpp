#include "yiqmark/keystream.hpp"

#include <numeric>

#include "yiqmark/error.hpp"

namespace yiqmark {

void validate(const KeySchedule& ks) {
  if (ks.count_a == ks.count_b) {
    throw Error(ErrorCode::InvalidParam, "count_a and count_b must differ");
  }
}

ChipSequence pn_bits(std::uint64_t seed, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidParam, "PN length must be >= 1");
  PnGenerator gen(seed);
  ChipSequence chips(length);
  for (int& c : chips) c = gen.next_chip();
  return chips;
}

PnPair pn_pair(std::uint64_t pn_seed, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidParam, "PN length must be >= 1");
  PnGenerator gen(pn_seed);
  auto window = [&] {
    ChipSequence w(length);
    for (int& c : w) c = gen.next_chip();
    return w;
  };
  PnPair pair{window(), window()};
  while (pair.pn1 == pair.pn0) pair.pn1 = window();
  return pair;
}

std::uint64_t scramble_iterations(const KeySchedule& ks, std::size_t wm_bit_count,
                                  std::uint64_t period) {
  if (period == 0) throw Error(ErrorCode::InvalidParam, "period must be >= 1");
  const ChipSequence chips = pn_bits(ks.k1, wm_bit_count);
  const std::int64_t sum = std::accumulate(chips.begin(), chips.end(), std::int64_t{0});
  const std::uint64_t count = sum > ks.threshold ? ks.count_a : ks.count_b;
  const std::uint64_t t = count % period;  // (P + count) mod P
  return t == 0 ? period : t;
}

}  // namespace yiqmark

#include "yiqmark/block_dct.hpp"

#include <algorithm>
#include <string>

#include "yiqmark/error.hpp"

namespace yiqmark {

MidBandMask::MidBandMask(std::vector<CoeffPos> positions) : positions_(std::move(positions)) {
  if (positions_.size() < 4) {
    throw Error(ErrorCode::InvalidParam, "mid-band mask needs at least 4 positions");
  }
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    const CoeffPos& p = positions_[k];
    if (p.row > 3 || p.col > 3) {
      throw Error(ErrorCode::InvalidParam, "mid-band position outside the 4x4 block");
    }
    if (p.row == 0 && p.col == 0) {
      throw Error(ErrorCode::InvalidParam, "mid-band mask must not include the DC coefficient");
    }
    if (std::find(positions_.begin(), positions_.begin() + static_cast<std::ptrdiff_t>(k), p) !=
        positions_.begin() + static_cast<std::ptrdiff_t>(k)) {
      throw Error(ErrorCode::InvalidParam, "duplicate mid-band position (" +
                                               std::to_string(p.row) + "," +
                                               std::to_string(p.col) + ")");
    }
  }
}

MidBandMask MidBandMask::reference() {
  return MidBandMask({{0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}});
}

std::vector<double> midband_get(const Block4& c, const MidBandMask& mask) {
  std::vector<double> out;
  out.reserve(mask.size());
  for (const CoeffPos& p : mask.positions()) out.push_back(c[p.row][p.col]);
  return out;
}

Block4 midband_set(Block4 c, const MidBandMask& mask, std::span<const double> values) {
  if (values.size() != mask.size()) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(mask.size()) +
                                               " mid-band values, got " +
                                               std::to_string(values.size()));
  }
  std::size_t k = 0;
  for (const CoeffPos& p : mask.positions()) c[p.row][p.col] = values[k++];
  return c;
}

}  // namespace yiqmark

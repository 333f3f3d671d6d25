#include "yiqmark/haar_dwt.hpp"

#include "yiqmark/error.hpp"

namespace yiqmark {

SubBands dwt_haar(const Plane& p) {
  if (p.width() % 2 != 0 || p.height() % 2 != 0 || p.width() == 0 || p.height() == 0) {
    throw Error(ErrorCode::OddDimension, "Haar analysis needs even, non-zero dimensions");
  }
  const std::size_t w = p.width() / 2;
  const std::size_t h = p.height() / 2;
  SubBands s{Plane(w, h), Plane(w, h), Plane(w, h), Plane(w, h)};
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double a = p.at(2 * x, 2 * y);
      const double b = p.at(2 * x + 1, 2 * y);
      const double c = p.at(2 * x, 2 * y + 1);
      const double d = p.at(2 * x + 1, 2 * y + 1);
      s.ll.at(x, y) = (a + b + c + d) * 0.5;
      s.hl.at(x, y) = (a - b + c - d) * 0.5;
      s.lh.at(x, y) = (a + b - c - d) * 0.5;
      s.hh.at(x, y) = (a - b - c + d) * 0.5;
    }
  }
  return s;
}

Plane idwt_haar(const SubBands& s) {
  if (!s.ll.same_shape(s.hl) || !s.ll.same_shape(s.lh) || !s.ll.same_shape(s.hh)) {
    throw Error(ErrorCode::DimensionMismatch, "sub-bands differ in size");
  }
  const std::size_t w = s.ll.width();
  const std::size_t h = s.ll.height();
  Plane p(2 * w, 2 * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double ll = s.ll.at(x, y);
      const double hl = s.hl.at(x, y);
      const double lh = s.lh.at(x, y);
      const double hh = s.hh.at(x, y);
      p.at(2 * x, 2 * y) = (ll + hl + lh + hh) * 0.5;
      p.at(2 * x + 1, 2 * y) = (ll - hl + lh - hh) * 0.5;
      p.at(2 * x, 2 * y + 1) = (ll + hl - lh - hh) * 0.5;
      p.at(2 * x + 1, 2 * y + 1) = (ll - hl - lh + hh) * 0.5;
    }
  }
  return p;
}

}  // namespace yiqmark

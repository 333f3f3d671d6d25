#pragma once

#include "yiqmark/image.hpp"
#include "yiqmark/plane.hpp"

namespace yiqmark {

enum class Channel { Y, I, Q };

struct YiqImage {
  Plane y;
  Plane i;
  Plane q;

  Plane& plane(Channel c) { return c == Channel::Y ? y : c == Channel::I ? i : q; }
  const Plane& plane(Channel c) const { return c == Channel::Y ? y : c == Channel::I ? i : q; }
};

// NTSC forward and inverse matrices with the published three-decimal
// coefficients. The pair is not an exact inverse; the residual stays well
// under half a level and vanishes in the final rounding.
YiqImage rgb_to_yiq(const RgbImage& img);
RgbImage yiq_to_rgb(const YiqImage& img);

// Round half away from zero, then clamp to [0, 255].
std::uint8_t quantize_sample(double v) noexcept;

}  // namespace yiqmark

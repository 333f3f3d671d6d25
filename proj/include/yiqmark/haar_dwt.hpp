#pragma once

#include "yiqmark/plane.hpp"

namespace yiqmark {

// One decomposition level. For each 2x2 cell [a b; c d]:
//   ll = (a+b+c+d)/2   hl = (a-b+c-d)/2   lh = (a+b-c-d)/2   hh = (a-b-c+d)/2
// hl carries the horizontal high-pass (top-right quadrant of the usual layout).
struct SubBands {
  Plane ll;
  Plane hl;
  Plane lh;
  Plane hh;
};

SubBands dwt_haar(const Plane& p);
Plane idwt_haar(const SubBands& s);

}  // namespace yiqmark

#pragma once

#include <cmath>

namespace fermigas {

// A raw identity residual together with the magnitude of the largest
// participating term. Contracts downstream are stated as
// |value| <= tolerance * scale.
struct Residual {
  double value;
  double scale;

  double relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

}  // namespace fermigas

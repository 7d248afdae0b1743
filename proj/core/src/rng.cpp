#include "egf/rng.hpp"

namespace egf {

double Rng::uniform() {
  // 53 high bits -> [0, 1) with spacing 2^-53.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace egf

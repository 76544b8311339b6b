// constants.hpp
// Physical constants (SI). c and k_B are exact by definition since the 2019
// SI revision; hbar is derived from the exact Planck constant.
#pragma once

namespace rqi {

inline constexpr double kSpeedOfLight  = 299792458.0;      // m / s
inline constexpr double kBoltzmann     = 1.380649e-23;     // J / K
inline constexpr double kReducedPlanck = 1.054571817e-34;  // J s

}  // namespace rqi

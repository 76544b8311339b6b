// version.hpp
// Library version, reported in every CLI run manifest.
#pragma once

namespace rqi {

inline constexpr const char* kVersion = "0.1.0";

inline const char* version() { return kVersion; }

}  // namespace rqi

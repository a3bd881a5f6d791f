#pragma once

namespace constj {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace constj

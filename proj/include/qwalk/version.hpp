#pragma once

namespace qwalk {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace qwalk

#pragma once

namespace shuffle {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace shuffle

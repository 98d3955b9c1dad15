#pragma once

namespace realroots {

inline constexpr const char* version = "0.1.0";

}  // namespace realroots

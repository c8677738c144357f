#pragma once

namespace d3g3 {
inline constexpr const char* kVersion = "0.1.0";
}

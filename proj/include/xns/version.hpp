#pragma once

namespace xns {
inline constexpr const char* kVersion = "1.0.0";
}

#pragma once

namespace pair_radiance::cli {
inline constexpr const char* kVersion = "0.1.0";
}

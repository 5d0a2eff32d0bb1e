#pragma once

namespace hypmetrics {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hypmetrics

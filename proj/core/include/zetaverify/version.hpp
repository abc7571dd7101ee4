#pragma once

namespace zv {

inline constexpr const char* kVersion = "0.1.0";

} // namespace zv

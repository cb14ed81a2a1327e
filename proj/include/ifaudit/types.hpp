#pragma once

#include <cstdint>

namespace ifaudit {

/// Calendar year. Plain integer arithmetic (Y - i, Y + i).
using Year = std::int32_t;

/// Publication or citation count. Always >= 0 once validated.
using Count = std::int64_t;

}  // namespace ifaudit

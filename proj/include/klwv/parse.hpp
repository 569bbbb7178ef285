#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "klwv/freefield.hpp"

namespace klwv {

using ModuleLabel = std::variant<FockModule, SingletModule>;

/// "M:i", "V:p/q" or "F:l=p/q,a=p/q" (ℓ= also accepted).
ModuleLabel parse_module_label(std::string_view text);

std::int64_t parse_int(std::string_view text);

}  // namespace klwv

#include "klwv/parse.hpp"

#include <charconv>
#include <string>

namespace klwv {

namespace {

std::string_view strip_key(std::string_view field, std::initializer_list<std::string_view> keys) {
  for (const auto key : keys)
    if (field.substr(0, key.size()) == key) return field.substr(key.size());
  throw Error("malformed Fock label field: '" + std::string(field) + "'");
}

}  // namespace

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data() + (!text.empty() && text[0] == '+'), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) throw Error("malformed integer: '" + std::string(text) + "'");
  return value;
}

ModuleLabel parse_module_label(std::string_view text) {
  if (text.substr(0, 2) != "F:") return SingletModule::parse(text);
  const std::string_view body = text.substr(2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw Error("malformed Fock label: '" + std::string(text) + "'");
  const Rat level = Rat::parse(strip_key(body.substr(0, comma), {"l=", "ℓ="}));
  const Rat weight = Rat::parse(strip_key(body.substr(comma + 1), {"a="}));
  return FockModule(level, weight);
}

}  // namespace klwv

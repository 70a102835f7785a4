#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lgfocus {

enum class LogicVariant { LG0, LGI, CNL, CNLCompact };

inline bool is_cnl(LogicVariant v) { return v == LogicVariant::CNL || v == LogicVariant::CNLCompact; }

inline const char* variant_name(LogicVariant v) {
  switch (v) {
    case LogicVariant::LG0: return "lg0";
    case LogicVariant::LGI: return "lgi";
    case LogicVariant::CNL: return "cnl";
    case LogicVariant::CNLCompact: return "cnl-compact";
  }
  return "?";
}

inline std::optional<LogicVariant> parse_variant(std::string_view s) {
  for (auto v : {LogicVariant::LG0, LogicVariant::LGI, LogicVariant::CNL, LogicVariant::CNLCompact})
    if (s == variant_name(v)) return v;
  return std::nullopt;
}

}  // namespace lgfocus

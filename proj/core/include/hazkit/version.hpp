#pragma once

namespace hazkit {

inline constexpr const char* tool_name = "hazkit";
inline constexpr const char* tool_version = "0.1.0";
inline constexpr int document_schema_version = 1;

} // namespace hazkit

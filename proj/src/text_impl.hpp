#pragma once

// Internal text helpers: shortest round-trip double formatting and strict
// parsing, shared by the CSV/manifest writers and readers.

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

namespace schro::detail {

inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

/// Whole-string parse; returns false on any trailing garbage.
inline bool try_parse_double(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

inline bool try_parse_int(std::string_view text, int& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace schro::detail

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anibes {

/// Shortest decimal string that round-trips to the same double bit pattern.
std::string format_double(double value);

/// Strict double parse of an entire token (throws on trailing garbage).
double parse_double(std::string_view token);

/// FNV-1a 64-bit hash, used for config fingerprints embedded in reports.
std::uint64_t fnv1a64(std::string_view bytes);

/// Hex rendering of a 64-bit hash.
std::string hash_hex(std::uint64_t h);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace anibes

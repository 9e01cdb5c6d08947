#pragma once

#include <string>
#include <string_view>

namespace linksift::hash {

// Hex-encoded SHA-256 digest (64 chars).
std::string sha256_hex(std::string_view data);

// First 32 hex chars of the digest; used for content-addressed file names
// and link identifiers.
std::string sha256_hex32(std::string_view data);

// Digest of a file's raw bytes; throws std::runtime_error when unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace linksift::hash

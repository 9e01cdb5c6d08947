#pragma once

#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace linksift::jsonl {

// Insertion-ordered objects keep artifact field order stable across runs.
using Json = nlohmann::ordered_json;

// Reads every line as a JSON object. Blank lines are skipped; a malformed
// line raises std::runtime_error naming the line number.
std::vector<Json> read_file(const std::string& path);

void write_file(const std::string& path, const std::vector<Json>& rows);

void append_line(const std::string& path, const Json& row);

// Whole-document JSON (reports, manifests).
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);

// Plain text helpers shared by CLI and pipeline.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& content);

}  // namespace linksift::jsonl

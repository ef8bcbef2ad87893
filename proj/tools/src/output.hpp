#pragma once

#include <string>

#include "json.hpp"

// nlohmann's default map keeps keys sorted, which makes config hashing
// canonical: same parameters, same hash, regardless of insertion order.
using Json = nlohmann::json;

enum class Format { text, csv, json };

Format parse_format(const std::string& name);

// FNV-1a over the compact canonical dump, rendered as 16 hex digits.
std::string config_hash(const Json& config);

// Round-trip double rendering (shortest form would be nicer but %.17g is
// stable across libstdc++ versions).
std::string fmt_double(double x);

// `# config {...}` line embedded in csv/text payloads of stochastic runs.
std::string config_comment(const Json& config);

// Writes the payload to the path, or to stdout when the path is empty.
// Files start with a header line carrying tool version and config hash; for
// json output the header is itself a one-line JSON record so the file reads
// as an NDJSON stream (meta line, then the payload document).
void emit(const std::string& payload, const std::string& path, const Json& config,
          Format format);

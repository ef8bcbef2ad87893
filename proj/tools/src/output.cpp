#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "ballvol/exact.hpp"

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + name);
}

std::string config_hash(const Json& config) {
    const std::string s = config.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string config_comment(const Json& config) { return "# config " + config.dump(); }

void emit(const std::string& payload, const std::string& path, const Json& config,
          Format format) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (format == Format::json) {
        Json meta;
        meta["tool"] = "ballvol";
        meta["version"] = ballvol::version_string;
        meta["configHash"] = config_hash(config);
        out << meta.dump() << '\n';
    } else {
        out << "# ballvol " << ballvol::version_string << " config=" << config_hash(config)
            << '\n';
    }
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

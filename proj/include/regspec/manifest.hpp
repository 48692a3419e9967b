#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace regspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

// FNV-1a 64-bit content digest; cheap, stable, and good enough to detect any
// artifact drift between reruns.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string digest_hex(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

// Canonical serialization: 2-space indent, insertion-ordered keys, trailing
// newline.  Everything byte-compared between runs goes through here.
inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

// Writes the canonical form and returns its digest.
inline std::string write_artifact(const std::filesystem::path& path, const Json& j) {
    const std::string body = dump_canonical(j);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_artifact: cannot open " + path.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.close();
    return digest_hex(body);
}

// CSV projection of a flat table; JSON stays the canonical artifact.
// Returns the digest of the written bytes.
inline std::string write_csv(const std::filesystem::path& path,
                             const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
    std::string body;
    auto line = [&body](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) body += ',';
            body += cells[i];
        }
        body += '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    return digest_hex(body);
}

// Sidecar manifest: everything needed to reproduce plus the digests of what
// was produced.  Wall-clock lives only here, never in the artifacts, so the
// artifacts stay byte-identical across reruns and thread counts.
inline void write_manifest(const std::filesystem::path& path, const std::string& command,
                           const Json& params, std::uint64_t seed, double wall_clock_seconds,
                           const std::map<std::string, std::string>& artifact_digests) {
    Json m;
    m["command"] = command;
    m["version"] = kToolkitVersion;
    m["params"] = params;
    m["seed"] = seed;
    m["artifacts"] = Json::object();
    for (const auto& [file, digest] : artifact_digests) m["artifacts"][file] = digest;
    m["wall_clock_seconds"] = wall_clock_seconds;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_manifest: cannot open " + path.string());
    const std::string body = dump_canonical(m);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

}  // namespace regspec

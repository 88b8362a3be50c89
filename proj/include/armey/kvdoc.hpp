#pragma once

#include <string>
#include <vector>

namespace armey {

/// Line-oriented key-value document with ordered sections, the
/// machine-readable report format. Canonical rendering round-trips
/// byte-identically through parse_kv, so any consumer in any language can
/// re-emit it without loss.
///
///   [section.name]
///   key = value
struct KvSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    bool operator==(const KvSection&) const = default;
};

struct KvDoc {
    std::vector<KvSection> sections;

    KvSection& section(const std::string& name);
    const std::string* find(const std::string& section_name, const std::string& key) const;
    void set(const std::string& section_name, const std::string& key, const std::string& value);
    void set(const std::string& section_name, const std::string& key, double value);
    void set(const std::string& section_name, const std::string& key, int value);

    bool operator==(const KvDoc&) const = default;
};

std::string render_kv(const KvDoc& doc);
KvDoc parse_kv(const std::string& text);

/// Deterministic float formatting used throughout reports ("%.10g",
/// C locale assumed).
std::string format_double(double v);

/// FNV-1a 64-bit hash of a byte string, rendered as 16 hex digits; used to
/// fingerprint input data in report provenance.
std::string fnv1a_hex(const std::string& bytes);

/// Writes a file atomically (temp then rename).
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace armey

#include "armey/kvdoc.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "armey/error.hpp"

namespace armey {

KvSection& KvDoc::section(const std::string& name) {
    for (auto& s : sections)
        if (s.name == name) return s;
    sections.push_back({name, {}});
    return sections.back();
}

const std::string* KvDoc::find(const std::string& section_name, const std::string& key) const {
    for (const auto& s : sections) {
        if (s.name != section_name) continue;
        for (const auto& [k, v] : s.entries)
            if (k == key) return &v;
    }
    return nullptr;
}

void KvDoc::set(const std::string& section_name, const std::string& key,
                const std::string& value) {
    KvSection& s = section(section_name);
    for (auto& [k, v] : s.entries)
        if (k == key) {
            v = value;
            return;
        }
    s.entries.emplace_back(key, value);
}

void KvDoc::set(const std::string& section_name, const std::string& key, double value) {
    set(section_name, key, format_double(value));
}

void KvDoc::set(const std::string& section_name, const std::string& key, int value) {
    set(section_name, key, std::to_string(value));
}

std::string render_kv(const KvDoc& doc) {
    std::string out;
    bool first = true;
    for (const auto& s : doc.sections) {
        if (!first) out += '\n';
        first = false;
        out += '[';
        out += s.name;
        out += "]\n";
        for (const auto& [k, v] : s.entries) {
            out += k;
            out += " = ";
            out += v;
            out += '\n';
        }
    }
    return out;
}

KvDoc parse_kv(const std::string& text) {
    KvDoc doc;
    KvSection* current = nullptr;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw Error::data("kv line " + std::to_string(lineno) + ": unterminated section");
            doc.sections.push_back({line.substr(1, line.size() - 2), {}});
            current = &doc.sections.back();
            continue;
        }
        const std::size_t eq = line.find(" = ");
        if (eq == std::string::npos || !current)
            throw Error::data("kv line " + std::to_string(lineno) + ": expected 'key = value'");
        current->entries.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
    return doc;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error::data("cannot write '" + tmp + "'");
        out << content;
        if (!out.good()) throw Error::data("short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error::data("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::data("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace armey

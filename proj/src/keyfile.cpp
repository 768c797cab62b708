#include "molsim/keyfile.hpp"

#include <cstdlib>
#include <sstream>

namespace molsim {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<KeyValue> parse_keyfile(const std::string& text, const std::string& filename) {
    std::vector<KeyValue> out;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw KeyFileError(filename, line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) throw KeyFileError(filename, line, "empty section name");
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw KeyFileError(filename, line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw KeyFileError(filename, line, "empty key");
        if (value.empty()) throw KeyFileError(filename, line, "empty value for key '" + key + "'");
        out.push_back(KeyValue{section, key, value, line});
    }
    return out;
}

double parse_double(const KeyValue& kv, const std::string& filename) {
    char* end = nullptr;
    double v = std::strtod(kv.value.c_str(), &end);
    if (end == kv.value.c_str() || *end != '\0')
        throw KeyFileError(filename, kv.line, "invalid number '" + kv.value + "' for key '" + kv.key + "'");
    return v;
}

int parse_int(const KeyValue& kv, const std::string& filename) {
    char* end = nullptr;
    long v = std::strtol(kv.value.c_str(), &end, 10);
    if (end == kv.value.c_str() || *end != '\0')
        throw KeyFileError(filename, kv.line, "invalid integer '" + kv.value + "' for key '" + kv.key + "'");
    return static_cast<int>(v);
}

}  // namespace molsim

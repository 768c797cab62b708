#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace molsim {

/// Line-oriented `key = value` file with `[section]` headers and `#` comments.
struct KeyValue {
    std::string section;
    std::string key;
    std::string value;
    int line;
};

struct KeyFileError : std::runtime_error {
    int line;
    KeyFileError(const std::string& file, int line_, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line_) + ": " + what), line(line_) {}
};

std::vector<KeyValue> parse_keyfile(const std::string& text, const std::string& filename);

double parse_double(const KeyValue& kv, const std::string& filename);
int parse_int(const KeyValue& kv, const std::string& filename);

}  // namespace molsim

#include "gridsvm/config_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gridsvm/types.hpp"

namespace gridsvm {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    const std::size_t begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    const std::size_t end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

KeyValueFile KeyValueFile::parse(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        kv.entries_[key] = value;
    }
    return kv;
}

const std::string& KeyValueFile::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw ConfigError(origin_ + ": missing key '" + key + "'");
    }
    return it->second;
}

double KeyValueFile::get_double(const std::string& key) const {
    const std::string& value = get(key);
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" + value + "'");
    }
    return parsed;
}

long long KeyValueFile::get_int(const std::string& key) const {
    const std::string& value = get(key);
    char* end = nullptr;
    const long long parsed = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(origin_ + ": key '" + key + "' is not an integer: '" + value + "'");
    }
    return parsed;
}

std::vector<double> KeyValueFile::get_double_list(const std::string& key) const {
    const std::string& value = get(key);
    std::vector<double> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw ConfigError(origin_ + ": key '" + key + "' has an empty list entry");
        }
        char* end = nullptr;
        const double parsed = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0') {
            throw ConfigError(origin_ + ": key '" + key + "' has a non-numeric entry: '" + item + "'");
        }
        out.push_back(parsed);
    }
    if (out.empty()) {
        throw ConfigError(origin_ + ": key '" + key + "' is an empty list");
    }
    return out;
}

}  // namespace gridsvm

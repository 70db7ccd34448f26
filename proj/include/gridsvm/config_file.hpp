#pragma once

#include <map>
#include <string>
#include <vector>

namespace gridsvm {

// Minimal key = value config reader. Blank lines and '#' comments are
// ignored; keys are case-sensitive; values keep inner whitespace.
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return entries_.count(key) > 0; }
    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;
    long long get_int(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;  // comma-separated

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::string origin_;
    std::map<std::string, std::string> entries_;
};

}  // namespace gridsvm

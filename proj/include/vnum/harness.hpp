#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vnum::cli {

// Ordered key/value report; identical inputs render byte-identically.
struct Report {
    std::string title;
    std::vector<std::pair<std::string, std::string>> rows;

    void add(std::string key, std::string value) {
        rows.emplace_back(std::move(key), std::move(value));
    }
    void print(std::ostream& os, bool kv) const;
};

// Exit codes: 0 success, 1 computation/validation failure, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vnum::cli

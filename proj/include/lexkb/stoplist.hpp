#pragma once

#include <fstream>
#include <string>
#include <unordered_set>

#include "error.hpp"
#include "text.hpp"

namespace lexkb {

class StopList {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open stop list " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto t = text::trim(line);
            if (!t.empty()) words_.insert(text::fold(t));
        }
    }
    void add(const std::string& w) { words_.insert(text::fold(w)); }
    bool contains(std::string_view token) const { return !token.empty() && words_.count(text::fold(token)) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

} // namespace lexkb

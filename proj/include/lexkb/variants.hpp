#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>

#include "error.hpp"
#include "text.hpp"

namespace lexkb {

// American <-> British spellings. The shipped list maps a few forms to two
// partners, so both directions are multimaps.
class VariantTable {
public:
    void add(const std::string& american, const std::string& british) {
        auto a = text::fold(american), b = text::fold(british);
        if (a == b) return;
        am_to_br_[a].insert(b);
        br_to_am_[b].insert(a);
        ++pairs_;
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open variant table " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto tab = line.find('\t');
            if (line.empty() || line[0] == '#' || tab == std::string::npos) continue;
            add(line.substr(0, tab), line.substr(tab + 1));
            ++lines_;
        }
    }

    std::set<std::string> british(const std::string& w) const { return get(am_to_br_, w); }
    std::set<std::string> american(const std::string& w) const { return get(br_to_am_, w); }

    std::set<std::string> variants(const std::string& w) const {
        auto out = british(w);
        auto other = american(w);
        out.insert(other.begin(), other.end());
        return out;
    }

    std::size_t lines() const { return lines_; }
    std::size_t distinct_pairs() const { return pairs_; }

private:
    static std::set<std::string> get(const std::map<std::string, std::set<std::string>>& m, const std::string& w) {
        auto it = m.find(text::fold(w));
        return it == m.end() ? std::set<std::string>{} : it->second;
    }
    std::map<std::string, std::set<std::string>> am_to_br_, br_to_am_;
    std::size_t lines_ = 0, pairs_ = 0;
};

} // namespace lexkb

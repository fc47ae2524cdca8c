#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "pos.hpp"
#include "text.hpp"

namespace lexkb {

struct DetachmentRule {
    Pos pos;
    std::string suffix;
    std::string replacement;
};

// The twenty suffix-detachment rules, in table order per part of speech.
// Adverbs have no rules, only an exception list.
inline const std::vector<DetachmentRule>& detachment_rules() {
    static const std::vector<DetachmentRule> rules{
        {Pos::N, "s", ""},     {Pos::N, "ses", "s"},  {Pos::N, "xes", "x"},   {Pos::N, "zes", "z"},
        {Pos::N, "ches", "ch"}, {Pos::N, "shes", "sh"}, {Pos::N, "men", "man"}, {Pos::N, "ies", "y"},
        {Pos::VB, "s", ""},    {Pos::VB, "ies", "y"}, {Pos::VB, "es", "e"},   {Pos::VB, "es", ""},
        {Pos::VB, "ed", "e"},  {Pos::VB, "ed", ""},   {Pos::VB, "ing", "e"},  {Pos::VB, "ing", ""},
        {Pos::ADJ, "er", ""},  {Pos::ADJ, "est", ""}, {Pos::ADJ, "er", "e"},  {Pos::ADJ, "est", "e"},
    };
    return rules;
}

class Morphology {
public:
    Morphology() = default;

    void add_exception(Pos pos, const std::string& inflected, const std::string& base) {
        exceptions_[static_cast<int>(pos)][text::fold(inflected)].insert(text::fold(base));
    }

    // "inflected base [base...]" per line
    void load_exceptions(Pos pos, const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open exception list " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto w = text::words(line);
            if (w.size() < 2 || w[0][0] == '#') continue;
            for (std::size_t i = 1; i < w.size(); ++i) add_exception(pos, w[0], w[i]);
        }
    }

    std::size_t exception_count(Pos pos) const {
        std::size_t n = 0;
        for (auto& [k, v] : exceptions_[static_cast<int>(pos)]) n += v.size();
        return n;
    }

    // Exception hits for any POS, if present.
    std::set<std::string> exception_bases(const std::string& folded) const {
        std::set<std::string> out;
        for (auto& table : exceptions_)
            if (auto it = table.find(folded); it != table.end()) out.insert(it->second.begin(), it->second.end());
        return out;
    }

    // Every candidate base form of a single token. The POS of the input is
    // unknown, so all tables contribute. Phrases are returned unchanged.
    std::set<std::string> base_forms(std::string_view surface) const {
        auto s = text::normalize(surface);
        std::set<std::string> out{s};
        if (s.empty() || s.find(' ') != std::string::npos) return out;
        auto exc = exception_bases(s);
        out.insert(exc.begin(), exc.end());
        for (auto& r : detachment_rules()) {
            if (!text::ends_with(s, r.suffix)) continue;
            auto base = s.substr(0, s.size() - r.suffix.size()) + r.replacement;
            if (!base.empty()) out.insert(base);
        }
        return out;
    }

    // Same candidates, in precedence order: the surface, exception bases,
    // then rule outputs in table order.
    std::vector<std::string> ordered_base_forms(std::string_view surface) const {
        auto s = text::normalize(surface);
        std::vector<std::string> out{s};
        auto add = [&](const std::string& f) {
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        };
        if (s.empty() || s.find(' ') != std::string::npos) return out;
        for (auto& b : exception_bases(s)) add(b);
        for (auto& r : detachment_rules()) {
            if (!text::ends_with(s, r.suffix)) continue;
            auto base = s.substr(0, s.size() - r.suffix.size()) + r.replacement;
            if (!base.empty()) add(base);
        }
        return out;
    }

    // Which rules fired (for diagnostics and tests).
    std::vector<const DetachmentRule*> matching_rules(std::string_view surface) const {
        std::vector<const DetachmentRule*> out;
        auto s = text::normalize(surface);
        for (auto& r : detachment_rules())
            if (text::ends_with(s, r.suffix) && s.size() - r.suffix.size() + r.replacement.size() > 0)
                out.push_back(&r);
        return out;
    }

private:
    std::array<std::map<std::string, std::set<std::string>>, 5> exceptions_;
};

} // namespace lexkb

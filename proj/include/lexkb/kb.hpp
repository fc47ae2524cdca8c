#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pos.hpp"
#include "text.hpp"

namespace lexkb {

// (head, keyword, POS). keyword is kept folded so that comparisons are
// case-insensitive; the paragraph keeps the display spelling.
struct SenseKey {
    int head = 0;
    Pos pos = Pos::N;
    std::string keyword;

    SenseKey() = default;
    SenseKey(int h, std::string kw, Pos p) : head(h), pos(p), keyword(text::normalize(kw)) {}

    auto operator<=>(const SenseKey&) const = default;
    bool operator==(const SenseKey&) const = default;
};

inline std::string to_string(const SenseKey& k) {
    return k.keyword + " " + std::to_string(k.head) + " " + std::string(pos_label(k.pos));
}

enum class RelationKind { cross_reference, see };

struct ExplicitRelation {
    RelationKind kind = RelationKind::cross_reference;
    int target_head = 0;
    std::string target_keyword;
    bool operator==(const ExplicitRelation&) const = default;
};

enum class StyleTag { derog, e, tdmk, vulg };

inline std::string_view tag_label(StyleTag t) {
    switch (t) {
    case StyleTag::derog: return "derog";
    case StyleTag::e: return "e";
    case StyleTag::tdmk: return "tdmk";
    case StyleTag::vulg: return "vulg";
    }
    return "?";
}

inline std::optional<StyleTag> parse_tag(std::string_view s) {
    if (s == "derog") return StyleTag::derog;
    if (s == "e") return StyleTag::e;
    if (s == "tdmk") return StyleTag::tdmk;
    if (s == "vulg") return StyleTag::vulg;
    return std::nullopt;
}

struct SemicolonGroup {
    std::vector<std::string> words;   // display spelling
    std::vector<ExplicitRelation> relations;
    std::vector<std::pair<std::string, StyleTag>> tags;

    bool contains(std::string_view folded) const {
        return std::any_of(words.begin(), words.end(),
                           [&](const std::string& w) { return text::normalize(w) == folded; });
    }
    bool operator==(const SemicolonGroup&) const = default;
};

struct Paragraph {
    SenseKey sense;
    std::string keyword;   // display spelling
    std::vector<SemicolonGroup> groups;
    bool operator==(const Paragraph&) const = default;
};

struct TaxonomyAddress {
    int class_num = 0;
    std::string class_name;
    int section_num = 0;
    std::string section_name;
    std::string subsection_name;   // empty when the section has none
    std::vector<int> headgroup;
    int head_num = 0;
    std::string head_name;
    bool operator==(const TaxonomyAddress&) const = default;
};

struct Head {
    TaxonomyAddress address;
    std::vector<Paragraph> paragraphs;   // N., ADJ., VB., ADV., INT. blocks in that order
    bool operator==(const Head&) const = default;
};

struct KbStats {
    std::size_t heads = 0, paragraphs = 0, groups = 0, words = 0, relations = 0;
};

class KnowledgeBase {
public:
    KnowledgeBase() = default;

    // Validates structure; dangling cross-references are reported through
    // warnings() rather than thrown.
    explicit KnowledgeBase(std::vector<Head> heads) {
        if (heads.empty()) throw Error("knowledge base must contain at least one head");
        for (auto& h : heads) {
            const int n = h.address.head_num;
            if (n <= 0) throw Error("head number must be positive: " + std::to_string(n));
            if (h.address.class_num < 1 || h.address.class_num > 8)
                throw Error("head " + std::to_string(n) + ": class number out of range 1..8");
            auto& hg = h.address.headgroup;
            if (hg.empty()) hg = {n};
            if (hg.size() > 3 || std::find(hg.begin(), hg.end(), n) == hg.end() || !std::is_sorted(hg.begin(), hg.end()) ||
                std::adjacent_find(hg.begin(), hg.end()) != hg.end())
                throw Error("head " + std::to_string(n) + ": malformed head group");
            std::stable_sort(h.paragraphs.begin(), h.paragraphs.end(),
                             [](const Paragraph& a, const Paragraph& b) { return a.sense.pos < b.sense.pos; });
            if (!heads_.emplace(n, std::move(h)).second)
                throw Error("duplicate head number " + std::to_string(n));
        }
        for (auto& [n, h] : heads_) {
            for (std::size_t i = 0; i < h.paragraphs.size(); ++i) {
                auto& p = h.paragraphs[i];
                if (p.groups.empty()) throw Error("paragraph " + to_string(p.sense) + " has no groups");
                for (auto& g : p.groups)
                    if (g.words.empty()) throw Error("paragraph " + to_string(p.sense) + " has an empty group");
                if (text::normalize(p.groups.front().words.front()) != p.sense.keyword)
                    throw Error("paragraph " + to_string(p.sense) + ": keyword does not open the first group");
                if (p.sense.head != n) throw Error("paragraph " + to_string(p.sense) + " filed under head " + std::to_string(n));
                if (!index_.emplace(p.sense, std::make_pair(n, i)).second)
                    throw Error("duplicate paragraph " + to_string(p.sense));
            }
        }
        for (auto& [n, h] : heads_)
            for (auto& p : h.paragraphs)
                for (auto& g : p.groups)
                    for (auto& r : g.relations)
                        if (!resolves(r))
                            warnings_.push_back("dangling " + std::string(r.kind == RelationKind::see ? "see" : "cross-reference") +
                                                " in " + to_string(p.sense) + " -> " + std::to_string(r.target_head) + " " +
                                                r.target_keyword);
    }

    const Head& get_head(int head_num) const {
        auto it = heads_.find(head_num);
        if (it == heads_.end()) throw NotFound("no head numbered " + std::to_string(head_num));
        return it->second;
    }

    bool has_head(int head_num) const { return heads_.count(head_num) != 0; }

    const Paragraph* find(const SenseKey& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return nullptr;
        return &heads_.at(it->second.first).paragraphs[it->second.second];
    }

    const Paragraph& resolve(const SenseKey& k) const {
        if (auto* p = find(k)) return *p;
        throw NotFound("dangling reference: " + to_string(k));
    }

    // A cross-reference names a head and a keyword but no POS; it resolves
    // when any paragraph of that head carries the keyword.
    bool resolves(const ExplicitRelation& r) const {
        auto it = heads_.find(r.target_head);
        if (it == heads_.end()) return false;
        auto kw = text::normalize(r.target_keyword);
        return std::any_of(it->second.paragraphs.begin(), it->second.paragraphs.end(),
                           [&](const Paragraph& p) { return p.sense.keyword == kw; });
    }

    // Every group of the paragraph holding the word or one of the extra forms.
    std::vector<std::size_t> groups_containing(const SenseKey& k, std::string_view word,
                                               const std::vector<std::string>& forms = {}) const {
        const auto& p = resolve(k);
        std::set<std::string> wanted{text::normalize(word)};
        for (auto& f : forms) wanted.insert(text::normalize(f));
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < p.groups.size(); ++i)
            for (auto& w : p.groups[i].words)
                if (wanted.count(text::normalize(w))) {
                    out.push_back(i);
                    break;
                }
        return out;
    }

    std::size_t locate(const SenseKey& k, std::string_view word, const std::vector<std::string>& forms = {}) const {
        auto gs = groups_containing(k, word, forms);
        if (gs.empty()) throw NotFound("'" + std::string(word) + "' not in paragraph " + to_string(k));
        return gs.front();
    }

    const std::map<int, Head>& heads() const { return heads_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    KbStats stats() const {
        KbStats s;
        s.heads = heads_.size();
        for (auto& [n, h] : heads_)
            for (auto& p : h.paragraphs) {
                ++s.paragraphs;
                for (auto& g : p.groups) {
                    ++s.groups;
                    s.words += g.words.size();
                    s.relations += g.relations.size();
                }
            }
        return s;
    }

    template <class F>
    void for_each_paragraph(F&& f) const {
        for (auto& [n, h] : heads_)
            for (auto& p : h.paragraphs) f(h, p);
    }

private:
    std::map<int, Head> heads_;
    std::map<SenseKey, std::pair<int, std::size_t>> index_;
    std::vector<std::string> warnings_;
};

} // namespace lexkb

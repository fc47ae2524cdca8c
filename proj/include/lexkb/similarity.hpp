#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "index.hpp"

namespace lexkb {

inline constexpr int kMaxDistance = 16;

using Rational = boost::rational<long long>;

struct WordNotFound : NotFound {
    WordNotFound(std::string w, int which)
        : NotFound("'" + w + "' is not in the index"), word(std::move(w)), which(which) {}
    std::string word;
    int which;   // 1 or 2: which argument was missing
};

struct ArrowStyle {
    std::string up = "→", down = "←", same = "↔";
    static ArrowStyle ascii() { return {"-->", "<--", "<->"}; }
};

struct Path {
    std::string word1, word2;
    Hit ref1, ref2;
    int length = 0;
    // node labels climbing from word1 (excluding the apex), the apex, then
    // the labels descending to word2
    std::vector<std::string> up;
    std::string apex;
    std::vector<std::string> down;
};

struct PathSet {
    std::string word1, word2;   // as given
    std::string norm1, norm2;   // normalized
    std::vector<Path> paths;    // stable-sorted by length
    int min_length = kMaxDistance;
    std::size_t min_path_count = 0;
};

namespace node {

inline std::string head(const TaxonomyAddress& a) { return std::to_string(a.head_num) + ". " + a.head_name; }

inline std::string headgroup(const TaxonomyAddress& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.headgroup.size(); ++i) s += (i ? ", " : "") + std::to_string(a.headgroup[i]);
    return s + "]";
}

inline std::string subsection(const TaxonomyAddress& a) {
    return a.subsection_name.empty() ? std::string("(no sub-section)") : a.subsection_name;
}

inline std::string section(const TaxonomyAddress& a) {
    return "Section " + text::number_word(a.section_num) + " : " + a.section_name;
}

inline std::string klass(const TaxonomyAddress& a) {
    return "Class " + text::number_word(a.class_num) + " : " + a.class_name;
}

} // namespace node

// Node labels from the word up to the root "T".
inline std::vector<std::string> chain_to_root(const KnowledgeBase& kb, const std::string& word, const SenseKey& s) {
    const auto& p = kb.resolve(s);
    const auto& a = kb.get_head(s.head).address;
    return {word,          p.keyword,          std::string(pos_label(s.pos)), node::head(a), node::headgroup(a),
            node::subsection(a), node::section(a), node::klass(a),                 "T"};
}

// Edge count between two references: twice the depth of the first shared
// taxonomy level.
inline int reference_distance(const KnowledgeBase& kb, const Hit& a, const Hit& b) {
    if (a.sense == b.sense) {
        if (a.matched == b.matched) return 0;
        if (!a.literal_forms.empty() && !b.literal_forms.empty()) {
            auto ga = kb.groups_containing(a.sense, a.literal_forms.front(), a.literal_forms);
            auto gb = kb.groups_containing(b.sense, b.literal_forms.front(), b.literal_forms);
            for (auto g : ga)
                if (std::find(gb.begin(), gb.end(), g) != gb.end()) return 0;
        }
        return 2;
    }
    const auto& x = kb.get_head(a.sense.head).address;
    const auto& y = kb.get_head(b.sense.head).address;
    if (x.head_num == y.head_num) return a.sense.pos == b.sense.pos ? 4 : 6;
    if (x.headgroup == y.headgroup) return 8;
    bool same_class = x.class_num == y.class_num;
    bool same_section = same_class && x.section_num == y.section_num;
    if (same_section && x.subsection_name == y.subsection_name) return 10;
    if (same_section) return 12;
    if (same_class) return 14;
    return 16;
}

inline Path path_between(const KnowledgeBase& kb, const std::string& w1, const Hit& r1, const std::string& w2,
                         const Hit& r2) {
    Path p;
    p.word1 = w1;
    p.word2 = w2;
    p.ref1 = r1;
    p.ref2 = r2;
    p.length = reference_distance(kb, r1, r2);
    auto c1 = chain_to_root(kb, w1, r1.sense);
    auto c2 = chain_to_root(kb, w2, r2.sense);
    std::size_t k = static_cast<std::size_t>(p.length / 2);
    if (k > 0) {
        p.up.assign(c1.begin(), c1.begin() + static_cast<long>(k));
        p.apex = c1[k];
        for (std::size_t i = k; i-- > 0;) p.down.push_back(c2[i]);
    }
    return p;
}

inline std::string describe(const KnowledgeBase& kb, const Hit& h) {
    return kb.resolve(h.sense).keyword + " " + std::to_string(h.sense.head) + " " + std::string(pos_label(h.sense.pos));
}

inline std::string render_header(const KnowledgeBase& kb, const Path& p) {
    return "Path between " + p.word1 + " (" + describe(kb, p.ref1) + ") and " + p.word2 + " (" + describe(kb, p.ref2) +
           ") [length = " + std::to_string(p.length) + "]";
}

inline std::string render_chain(const Path& p, const ArrowStyle& arrows = {}) {
    if (p.length == 0) return p.word1 + " " + arrows.same + " " + p.word2;
    std::string s;
    for (auto& n : p.up) s += n + " " + arrows.up + " ";
    s += p.apex;
    for (auto& n : p.down) s += " " + arrows.down + " " + n;
    return s;
}

inline std::vector<Hit> filter_pos(std::vector<Hit> hits, std::optional<Pos> pos) {
    if (!pos) return hits;
    std::erase_if(hits, [&](const Hit& h) { return h.sense.pos != *pos; });
    return hits;
}

inline PathSet all_paths(const Index& idx, const std::string& w1, const std::string& w2,
                         std::optional<Pos> pos_filter = std::nullopt) {
    PathSet ps;
    ps.word1 = w1;
    ps.word2 = w2;
    ps.norm1 = text::normalize(w1);
    ps.norm2 = text::normalize(w2);
    auto h1 = filter_pos(idx.lookup(w1), pos_filter);
    if (h1.empty()) throw WordNotFound(w1, 1);
    auto h2 = filter_pos(idx.lookup(w2), pos_filter);
    if (h2.empty()) throw WordNotFound(w2, 2);
    for (auto& a : h1)
        for (auto& b : h2) ps.paths.push_back(path_between(idx.kb(), w1, a, w2, b));
    std::stable_sort(ps.paths.begin(), ps.paths.end(), [](const Path& a, const Path& b) { return a.length < b.length; });
    ps.min_length = ps.paths.front().length;
    ps.min_path_count = static_cast<std::size_t>(std::count_if(
        ps.paths.begin(), ps.paths.end(), [&](const Path& p) { return p.length == ps.min_length; }));
    return ps;
}

inline int distance(const Index& idx, const std::string& w1, const std::string& w2,
                    std::optional<Pos> pos_filter = std::nullopt) {
    return all_paths(idx, w1, w2, pos_filter).min_length;
}

inline int sim1_from_distance(int d) { return kMaxDistance - d; }
inline Rational sim2_from_distance(int d) { return Rational(1, 1 + d); }

inline int sim1(const Index& idx, const std::string& w1, const std::string& w2) {
    return sim1_from_distance(distance(idx, w1, w2));
}
inline Rational sim2(const Index& idx, const std::string& w1, const std::string& w2) {
    return sim2_from_distance(distance(idx, w1, w2));
}

enum class ThesauralRelation { T0, T1, none };

inline std::string_view relation_label(ThesauralRelation r) {
    switch (r) {
    case ThesauralRelation::T0: return "T0: reiteration";
    case ThesauralRelation::T1: return "T1: same paragraph";
    case ThesauralRelation::none: return "none";
    }
    return "?";
}

inline ThesauralRelation t1_relation(const Index& idx, const std::string& w1, const std::string& w2) {
    if (text::normalize(w1) == text::normalize(w2)) return ThesauralRelation::T0;
    auto h1 = idx.lookup(w1), h2 = idx.lookup(w2);
    for (auto& a : h1)
        for (auto& b : h2)
            if (a.sense == b.sense) return ThesauralRelation::T1;
    return ThesauralRelation::none;
}

} // namespace lexkb

#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "kb.hpp"
#include "text.hpp"

namespace lexkb {

struct IngestOptions {
    bool strict = false;
    std::string source = "<input>";
};

struct IngestResult {
    KnowledgeBase kb;
    std::vector<std::string> warnings;
    std::size_t skipped_groups = 0;
};

struct Expansion {
    std::vector<std::string> words;
    std::vector<std::string> warnings;
};

namespace detail {

// Second halves that make "X or Y" an idiom rather than a shared-carrier
// abbreviation ("one way or another").
inline const std::set<std::string>& or_idiom_tails() {
    static const std::set<std::string> s{"another", "other", "not", "so", "less", "more", "never", "later", "else",
                                         "nothing", "none", "two", "three", "both", "either", "neither", "worse",
                                         "better", "die", "bust", "nay", "no", "something", "somewhere", "other's"};
    return s;
}

inline std::vector<std::string> expand_or(const std::string& entry, std::vector<std::string>& warnings) {
    auto toks = text::words(entry);
    std::size_t at = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i)
        if (toks[i] == "or") {
            if (at != toks.size()) return {entry};   // more than one "or": leave alone
            at = i;
        }
    if (at == toks.size() || at == 0 || at + 2 != toks.size()) return {entry};
    std::vector<std::string> head(toks.begin(), toks.begin() + static_cast<long>(at));
    const std::string& tail = toks.back();

    if (tail.size() > 1 && tail[0] == '-') {
        // "countryman or -woman": the tail replaces the shared ending of the last word
        std::string last = head.back(), stem = tail.substr(1);
        std::size_t common = 0;
        while (common < last.size() && common < stem.size() &&
               last[last.size() - 1 - common] == stem[stem.size() - 1 - common])
            ++common;
        if (common == 0 || common == stem.size()) {
            warnings.push_back("cannot expand suffix alternative in '" + entry + "'");
            return {entry};
        }
        auto other = head;
        other.back() = last.substr(0, last.size() - common) + stem;
        return {text::join(head, " "), text::join(other, " ")};
    }
    if (head.size() < 2 || or_idiom_tails().count(text::fold(tail))) return {entry};
    auto other = head;
    other.back() = tail;
    return {text::join(head, " "), text::join(other, " ")};
}

inline bool is_initial(const std::string& tok) {
    return tok.size() == 2 && tok[1] == '.' && std::isalpha(static_cast<unsigned char>(tok[0]));
}

} // namespace detail

// Expand the two abbreviation conventions of the printed thesaurus inside one
// semicolon group: a shared carrier ("drop a brick or clanger") and a repeated
// word cut to its initial ("weasel word, loan w.").
inline Expansion expand_group(const std::vector<std::string>& entries) {
    Expansion out;
    std::vector<std::string> seen_tokens;   // tokens of earlier entries, newest last
    std::set<std::string> emitted;
    for (auto& raw : entries) {
        auto toks = text::words(raw);
        for (auto& t : toks) {
            if (!detail::is_initial(t)) continue;
            char initial = static_cast<char>(std::tolower(static_cast<unsigned char>(t[0])));
            std::string found;
            for (auto it = seen_tokens.rbegin(); it != seen_tokens.rend(); ++it)
                if (it->size() > 1 && !detail::is_initial(*it) &&
                    std::tolower(static_cast<unsigned char>((*it)[0])) == initial) {
                    found = *it;
                    break;
                }
            if (found.empty())
                out.warnings.push_back("unexpandable initial '" + t + "' in '" + raw + "'");
            else
                t = found;
        }
        for (auto& w : detail::expand_or(text::join(toks, " "), out.warnings)) {
            if (w.empty() || !emitted.insert(text::normalize(w)).second) continue;
            out.words.push_back(w);
        }
        for (auto& t : toks) seen_tokens.push_back(t);
    }
    return out;
}

// Text form used by the CLI and tests: entries separated by ';' or, failing
// that, by ','.
inline std::string expand_abbreviations(std::string_view group_text, std::vector<std::string>* warnings = nullptr) {
    char sep = group_text.find(';') != std::string_view::npos ? ';' : ',';
    std::vector<std::string> entries;
    for (auto& e : text::split(group_text, sep)) {
        auto t = std::string(text::trim(e));
        if (!t.empty()) entries.push_back(t);
    }
    auto ex = expand_group(entries);
    if (warnings) warnings->insert(warnings->end(), ex.warnings.begin(), ex.warnings.end());
    return text::join(ex.words, std::string(1, sep) + " ");
}

namespace detail {

inline bool is_noise(std::string_view line) {
    static const std::regex code_debris(R"(#\d+\$)");
    if (!text::valid_utf8(line) || text::has_control_chars(line)) return true;
    if (text::fold(line).find("bad character") != std::string::npos) return true;
    return std::regex_search(line.begin(), line.end(), code_debris);
}

inline int parse_int(std::string_view s, const std::string& src, std::size_t line, const char* what) {
    s = text::trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(src, line, std::string("expected ") + what);
    return v;
}

// "<num> | <text>"
inline std::pair<int, std::string> num_and_name(std::string_view rest, const std::string& src, std::size_t line,
                                                const char* what) {
    auto bar = rest.find('|');
    if (bar == std::string_view::npos) throw ParseError(src, line, std::string("expected '<num> | <name>' after ") + what);
    int n = parse_int(rest.substr(0, bar), src, line, "a number");
    auto name = std::string(text::trim(rest.substr(bar + 1)));
    if (name.find('|') != std::string::npos) throw ParseError(src, line, "literal '|' in name");
    return {n, name};
}

} // namespace detail

inline IngestResult parse_corpus(std::istream& in, const IngestOptions& opt = {}) {
    const auto& src = opt.source;
    IngestResult res;
    std::vector<Head> heads;
    std::set<int> head_nums;

    std::optional<std::pair<int, std::string>> cls, sec;
    std::string subsection;
    std::vector<int> headgroup;
    Head* head = nullptr;
    std::optional<Pos> pos;
    std::optional<Paragraph> para;
    std::size_t para_line = 0;
    bool group_open = false;   // last group line was kept, so @-lines may attach

    auto warn = [&](std::size_t line, const std::string& msg) {
        res.warnings.push_back(src + ":" + std::to_string(line) + ": " + msg);
    };
    auto close_para = [&]() {
        if (!para) return;
        if (para->groups.empty()) {
            if (opt.strict || res.skipped_groups == 0)
                throw ParseError(src, para_line, "paragraph '" + para->keyword + "' has no semicolon groups");
            warn(para_line, "paragraph '" + para->keyword + "' dropped: every group was skipped");
        } else {
            auto& first = para->groups.front().words;
            if (text::normalize(first.front()) != para->sense.keyword) {
                // only reachable in lenient mode after a skipped opening group
                first.insert(first.begin(), para->keyword);
                warn(para_line, "keyword '" + para->keyword + "' restored at the head of its paragraph");
            }
            head->paragraphs.push_back(std::move(*para));
        }
        para.reset();
        group_open = false;
    };

    std::string raw;
    std::size_t ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto line = text::trim(raw);
        if (line.empty()) continue;

        if (line[0] == '#' && (line.size() == 1 || line[1] == ' ')) continue;   // comment

        std::string_view directive;
        std::string_view rest;
        if (line[0] == '#' && std::isalpha(static_cast<unsigned char>(line[1]))) {
            auto sp = line.find(' ');
            directive = line.substr(1, sp == std::string_view::npos ? std::string_view::npos : sp - 1);
            rest = sp == std::string_view::npos ? std::string_view{} : text::trim(line.substr(sp + 1));
        }

        if (directive == "class") {
            close_para();
            auto [n, name] = detail::num_and_name(rest, src, ln, "#class");
            if (n < 1 || n > 8) throw ParseError(src, ln, "class number out of range 1..8: " + std::to_string(n));
            cls = {n, name};
            sec.reset();
            subsection.clear();
            headgroup.clear();
            head = nullptr;
            pos.reset();
        } else if (directive == "section") {
            close_para();
            if (!cls) throw ParseError(src, ln, "#section before any #class");
            sec = detail::num_and_name(rest, src, ln, "#section");
            subsection.clear();
            headgroup.clear();
            head = nullptr;
            pos.reset();
        } else if (directive == "subsection") {
            close_para();
            if (!sec) throw ParseError(src, ln, "#subsection before any #section");
            subsection = std::string(rest);
            headgroup.clear();
            head = nullptr;
            pos.reset();
        } else if (directive == "headgroup") {
            close_para();
            if (!sec) throw ParseError(src, ln, "#headgroup before any #section");
            headgroup.clear();
            for (auto& part : text::split(rest, ',')) headgroup.push_back(detail::parse_int(part, src, ln, "a head number"));
            if (headgroup.empty() || headgroup.size() > 3)
                throw ParseError(src, ln, "head group must list 1 to 3 heads");
            for (std::size_t i = 1; i < headgroup.size(); ++i)
                if (headgroup[i] <= headgroup[i - 1]) throw ParseError(src, ln, "head group members must ascend");
            head = nullptr;
            pos.reset();
        } else if (directive == "head") {
            close_para();
            if (!cls || !sec) throw ParseError(src, ln, "#head outside the taxonomy (no #class/#section)");
            auto [n, name] = detail::num_and_name(rest, src, ln, "#head");
            if (n <= 0) throw ParseError(src, ln, "head number must be positive");
            if (!head_nums.insert(n).second) throw ParseError(src, ln, "duplicate head " + std::to_string(n));
            Head h;
            h.address.class_num = cls->first;
            h.address.class_name = cls->second;
            h.address.section_num = sec->first;
            h.address.section_name = sec->second;
            h.address.subsection_name = subsection;
            h.address.head_num = n;
            h.address.head_name = name;
            if (std::find(headgroup.begin(), headgroup.end(), n) == headgroup.end()) {
                if (!headgroup.empty()) warn(ln, "head " + std::to_string(n) + " is not in the declared head group");
                h.address.headgroup = {n};
            } else {
                h.address.headgroup = headgroup;
            }
            heads.push_back(std::move(h));
            head = &heads.back();
            pos.reset();
        } else if (directive == "pos") {
            close_para();
            if (!head) throw ParseError(src, ln, "#pos outside a head (expected #head)");
            pos = parse_pos(rest);
            if (!pos) throw ParseError(src, ln, "unknown part of speech '" + std::string(rest) + "'");
        } else if (directive == "para") {
            close_para();
            if (!pos) throw ParseError(src, ln, "#para outside a part-of-speech block (expected #pos)");
            if (rest.empty()) throw ParseError(src, ln, "#para needs a keyword");
            SenseKey key(head->address.head_num, std::string(rest), *pos);
            for (auto& p : head->paragraphs)
                if (p.sense == key) throw ParseError(src, ln, "duplicate keyword '" + std::string(rest) + "' in this head and part of speech");
            para = Paragraph{key, std::string(rest), {}};
            para_line = ln;
            group_open = false;
        } else if (!directive.empty()) {
            throw ParseError(src, ln, "unknown directive '#" + std::string(directive) + "'");
        } else if (line[0] == '@') {
            auto sp = line.find(' ');
            auto kind = line.substr(1, sp == std::string_view::npos ? std::string_view::npos : sp - 1);
            auto arg = sp == std::string_view::npos ? std::string_view{} : text::trim(line.substr(sp + 1));
            if (!para || para->groups.empty()) throw ParseError(src, ln, "@" + std::string(kind) + " before any group line");
            if (!group_open) continue;   // the group it belonged to was skipped as noise
            auto& g = para->groups.back();
            if (kind == "cref" || kind == "see") {
                auto [h, kw] = detail::num_and_name(arg, src, ln, kind == "see" ? "@see" : "@cref");
                g.relations.push_back({kind == "see" ? RelationKind::see : RelationKind::cross_reference, h, kw});
            } else if (kind == "tag") {
                auto bar = arg.find('|');
                if (bar == std::string_view::npos) throw ParseError(src, ln, "expected '@tag <word> | <tag>'");
                auto word = std::string(text::trim(arg.substr(0, bar)));
                auto t = parse_tag(text::trim(arg.substr(bar + 1)));
                if (!t) throw ParseError(src, ln, "unknown style tag");
                if (!g.contains(text::normalize(word))) warn(ln, "tagged word '" + word + "' is not in its group");
                g.tags.emplace_back(word, *t);
            } else {
                throw ParseError(src, ln, "unknown attachment '@" + std::string(kind) + "'");
            }
        } else {
            if (!para) throw ParseError(src, ln, "group line outside a paragraph (expected #para)");
            if (detail::is_noise(line)) {
                if (opt.strict) throw ParseError(src, ln, "corrupt group line");
                warn(ln, "skipped corrupt group line");
                ++res.skipped_groups;
                group_open = false;
                continue;
            }
            if (line.find('|') != std::string_view::npos) throw ParseError(src, ln, "literal '|' in a group line");
            std::vector<std::string> entries;
            for (auto& e : text::split(line, ';')) {
                auto t = text::join(text::words(e), " ");
                if (!t.empty()) entries.push_back(t);
            }
            auto ex = expand_group(entries);
            for (auto& w : ex.warnings) warn(ln, w);
            if (ex.words.empty()) throw ParseError(src, ln, "empty group line");
            if (para->groups.empty() && text::normalize(ex.words.front()) != para->sense.keyword && res.skipped_groups == 0)
                throw ParseError(src, ln, "paragraph keyword '" + para->keyword + "' must open its first group");
            para->groups.push_back(SemicolonGroup{std::move(ex.words), {}, {}});
            group_open = true;
        }
    }
    close_para();
    if (heads.empty()) throw ParseError(src, ln, "empty knowledge base: no #head found");
    try {
        res.kb = KnowledgeBase(std::move(heads));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(src, ln, e.what());
    }
    for (auto& w : res.kb.warnings()) res.warnings.push_back(src + ": " + w);
    return res;
}

inline IngestResult parse_corpus_file(const std::string& path, IngestOptions opt = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open corpus file " + path);
    opt.source = path;
    return parse_corpus(in, opt);
}

inline IngestResult parse_corpus_string(const std::string& s, IngestOptions opt = {}) {
    std::istringstream in(s);
    return parse_corpus(in, opt);
}

inline std::string serialize(const KnowledgeBase& kb) {
    std::ostringstream out;
    std::optional<std::pair<int, std::string>> cls, sec;
    std::optional<std::string> subsection;
    std::optional<std::vector<int>> headgroup;
    for (auto& [n, h] : kb.heads()) {
        const auto& a = h.address;
        bool reset = false;
        if (!cls || cls->first != a.class_num || cls->second != a.class_name) {
            out << "#class " << a.class_num << " | " << a.class_name << "\n";
            cls = {a.class_num, a.class_name};
            sec.reset();
            reset = true;
        }
        if (!sec || sec->first != a.section_num || sec->second != a.section_name) {
            out << "#section " << a.section_num << " | " << a.section_name << "\n";
            sec = {a.section_num, a.section_name};
            subsection = "";
            reset = true;
        }
        if (!subsection || *subsection != a.subsection_name) {
            out << "#subsection";
            if (!a.subsection_name.empty()) out << " " << a.subsection_name;
            out << "\n";
            subsection = a.subsection_name;
            reset = true;
        }
        if (reset || !headgroup || *headgroup != a.headgroup) {
            out << "#headgroup ";
            for (std::size_t i = 0; i < a.headgroup.size(); ++i) out << (i ? "," : "") << a.headgroup[i];
            out << "\n";
            headgroup = a.headgroup;
        }
        out << "#head " << n << " | " << a.head_name << "\n";
        std::optional<Pos> pos;
        for (auto& p : h.paragraphs) {
            if (pos != p.sense.pos) out << "#pos " << pos_label(p.sense.pos) << "\n";
            pos = p.sense.pos;
            out << "#para " << p.keyword << "\n";
            for (auto& g : p.groups) {
                out << text::join(g.words, "; ") << "\n";
                for (auto& r : g.relations)
                    out << (r.kind == RelationKind::see ? "@see " : "@cref ") << r.target_head << " | " << r.target_keyword
                        << "\n";
                for (auto& [w, t] : g.tags) out << "@tag " << w << " | " << tag_label(t) << "\n";
            }
        }
    }
    return out.str();
}

} // namespace lexkb

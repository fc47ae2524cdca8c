#pragma once

#include <charconv>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "similarity.hpp"

namespace lexkb {

struct Token {
    std::string surface;   // folded, edge punctuation stripped
    int sentence = 1;      // 1-based
    std::size_t position = 0;
};

struct TokenizedText {
    std::vector<std::string> sentences;
    std::vector<Token> tokens;
};

namespace detail {

inline bool word_byte(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '-' || c == '\'' || u >= 0x80;
}

inline std::string strip_edges(std::string w) {
    while (!w.empty() && (w.front() == '-' || w.front() == '\'')) w.erase(w.begin());
    while (!w.empty() && (w.back() == '-' || w.back() == '\'')) w.pop_back();
    return w;
}

} // namespace detail

// Sentences end at . ! or ? followed by whitespace and then an upper-case
// letter, or by the end of the text.
inline TokenizedText tokenize(std::string_view s) {
    TokenizedText t;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto sent = text::trim(s.substr(start, end - start));
        if (!sent.empty()) t.sentences.emplace_back(sent);
        start = end;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '.' && s[i] != '!' && s[i] != '?') continue;
        std::size_t j = i + 1;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j == s.size() || (j > i + 1 && std::isupper(static_cast<unsigned char>(s[j])))) flush(i + 1);
    }
    flush(s.size());
    for (std::size_t si = 0; si < t.sentences.size(); ++si) {
        const auto& sent = t.sentences[si];
        std::string cur;
        auto emit = [&] {
            auto w = detail::strip_edges(text::fold(cur));
            cur.clear();
            if (!w.empty()) t.tokens.push_back({w, static_cast<int>(si) + 1, t.tokens.size()});
        };
        for (char c : sent) {
            if (detail::word_byte(c))
                cur += c;
            else
                emit();
        }
        emit();
    }
    return t;
}

inline std::vector<Token> select_candidates(const TokenizedText& t, const StopList& stop) {
    std::vector<Token> out;
    for (auto& tok : t.tokens)
        if (!stop.contains(tok.surface)) out.push_back(tok);
    return out;
}

// Sentence-gap weights, with the overlapping windows read as 1-2, 3-4 and 5+ sentences.
struct ChainScoreTable {
    static Rational repetition(int) { return Rational(1); }
    static Rational same_paragraph(int gap) {
        if (gap <= 2) return Rational(1);
        if (gap <= 4) return Rational(3, 4);
        return Rational(1, 2);
    }
};

struct ProtoChain {
    SenseKey anchor;
    std::vector<std::size_t> members;   // indices into the candidate list
    Rational score{0};
    int start_line = 0;
};

// Sum of member contributions: the first member and every repetition score
// 1; any other member is weighted by its sentence gap to the member before it.
inline Rational score_chain(const std::vector<std::size_t>& members, const std::vector<Token>& cands) {
    Rational total{0};
    std::set<std::string> seen;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& tok = cands[members[i]];
        if (i == 0 || seen.count(tok.surface)) {
            total += ChainScoreTable::repetition(0);
        } else {
            int gap = tok.sentence - cands[members[i - 1]].sentence;
            total += ChainScoreTable::same_paragraph(gap);
        }
        seen.insert(tok.surface);
    }
    return total;
}

struct ChainOptions {
    // Expand each sense once across the whole text rather than once per word.
    bool sense_once_globally = true;
};

struct ChainStats {
    std::size_t candidates = 0;
    std::size_t relation_tests = 0;
    std::size_t max_senses = 0;
    std::size_t proto_chains = 0;
};

// Sense sets per distinct surface, computed once.
class SenseCache {
public:
    explicit SenseCache(const Index& idx) : idx_(idx) {}
    const std::vector<SenseKey>& senses(const std::string& surface) {
        auto it = cache_.find(surface);
        if (it != cache_.end()) return it->second;
        std::vector<SenseKey> v;
        for (auto& h : idx_.lookup(surface)) v.push_back(h.sense);
        return cache_.emplace(surface, std::move(v)).first->second;
    }
    bool has(const std::string& surface, const SenseKey& s) {
        auto& v = senses(surface);
        return std::find(v.begin(), v.end(), s) != v.end();
    }

private:
    const Index& idx_;
    std::map<std::string, std::vector<SenseKey>> cache_;
};

inline std::vector<ProtoChain> build_proto_chains(const Index& idx, const std::vector<Token>& cands,
                                                  const ChainOptions& opt = {}, ChainStats* stats = nullptr) {
    SenseCache cache(idx);
    std::vector<ProtoChain> out;
    std::set<SenseKey> used;
    std::set<std::string> done;
    ChainStats st;
    st.candidates = cands.size();
    for (std::size_t f = 0; f < cands.size(); ++f) {
        const auto& word = cands[f].surface;
        if (!done.insert(word).second) continue;
        const auto& senses = cache.senses(word);
        st.max_senses = std::max(st.max_senses, senses.size());
        std::set<SenseKey> mine;
        for (auto& s : senses) {
            if (opt.sense_once_globally ? !used.insert(s).second : !mine.insert(s).second) continue;
            ProtoChain pc;
            pc.anchor = s;
            pc.members = {f};
            std::set<std::string> surfaces{word};
            for (std::size_t k = f + 1; k < cands.size(); ++k) {
                ++st.relation_tests;
                const auto& w = cands[k].surface;
                if (surfaces.count(w) || cache.has(w, s)) {
                    pc.members.push_back(k);
                    surfaces.insert(w);
                }
            }
            if (pc.members.size() < 2) continue;
            pc.score = score_chain(pc.members, cands);
            pc.start_line = cands[f].sentence;
            out.push_back(std::move(pc));
        }
    }
    st.proto_chains = out.size();
    if (stats) *stats = st;
    return out;
}

// Step 4: the best proto-chain of every word. Ties go to the lower head,
// then the earlier start line.
inline std::vector<ProtoChain> best_per_word(const std::vector<ProtoChain>& protos, const std::vector<Token>& cands) {
    std::map<std::string, ProtoChain> best;
    std::vector<std::string> order;
    for (auto& p : protos) {
        const auto& w = cands[p.members.front()].surface;
        auto it = best.find(w);
        if (it == best.end()) {
            best.emplace(w, p);
            order.push_back(w);
            continue;
        }
        auto& b = it->second;
        if (p.score > b.score ||
            (p.score == b.score && (p.anchor.head < b.anchor.head ||
                                    (p.anchor.head == b.anchor.head && p.start_line < b.start_line))))
            b = p;
    }
    std::vector<ProtoChain> out;
    for (auto& w : order) out.push_back(best.at(w));
    std::stable_sort(out.begin(), out.end(), [](const ProtoChain& a, const ProtoChain& b) { return a.score > b.score; });
    return out;
}

// Step 5: repeatedly keep the strongest remaining chain and strip its
// occurrences from the rest, rescoring them; ties go to the chain starting
// earlier in the text, then the lower head.
inline std::vector<ProtoChain> select_chains(const std::vector<ProtoChain>& best, const std::vector<Token>& cands) {
    std::vector<ProtoChain> pool = best, out;
    std::set<std::size_t> taken;
    while (!pool.empty()) {
        auto pick = std::max_element(pool.begin(), pool.end(), [](const ProtoChain& a, const ProtoChain& b) {
            if (a.score != b.score) return a.score < b.score;
            if (a.members.front() != b.members.front()) return a.members.front() > b.members.front();
            return a.anchor > b.anchor;
        });
        ProtoChain chosen = *pick;
        pool.erase(pick);
        taken.insert(chosen.members.begin(), chosen.members.end());
        out.push_back(chosen);
        std::vector<ProtoChain> next;
        for (auto& p : pool) {
            std::erase_if(p.members, [&](std::size_t m) { return taken.count(m) != 0; });
            if (p.members.size() < 2) continue;
            p.score = score_chain(p.members, cands);
            p.start_line = cands[p.members.front()].sentence;
            next.push_back(std::move(p));
        }
        pool = std::move(next);
    }
    return out;
}

struct ChainRun {
    TokenizedText text;
    std::vector<Token> candidates;
    std::vector<ProtoChain> protos, best, chains;
    ChainStats stats;
};

inline ChainRun build_chains(const Index& idx, std::string_view input, const ChainOptions& opt = {}) {
    ChainRun r;
    r.text = tokenize(input);
    r.candidates = select_candidates(r.text, idx.resources().stop);
    r.protos = build_proto_chains(idx, r.candidates, opt, &r.stats);
    r.best = best_per_word(r.protos, r.candidates);
    r.chains = select_chains(r.best, r.candidates);
    return r;
}

// 9 -> "9.0", 7/4 -> "1.75"
inline std::string format_decimal(const Rational& r) {
    double v = boost::rational_cast<double>(r);
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, p);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
    return s;
}

inline std::string render_chain(const ProtoChain& c, const std::vector<Token>& cands) {
    std::string s;
    for (std::size_t i = 0; i < c.members.size(); ++i) s += (i ? ", " : "") + cands[c.members[i]].surface;
    return s + " [score: " + format_decimal(c.score) + ", sense: " + std::to_string(c.anchor.head) +
           ", line: " + std::to_string(c.start_line) + "]";
}

} // namespace lexkb

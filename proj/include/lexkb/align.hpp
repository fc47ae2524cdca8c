#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "index.hpp"

namespace lexkb {

struct Synset {
    std::string id;
    Pos pos = Pos::N;
    std::vector<std::string> members;
    std::string gloss;
    std::vector<std::string> hypernyms, hyponyms;
};

// "S <id> <pos> | w1; w2 | hyp:<id>,<id> | hypo:<id>,<id> [| gloss: text]"
class SynsetDump {
public:
    static SynsetDump parse(std::istream& in, const std::string& source = "<dump>") {
        SynsetDump d;
        std::string raw;
        std::size_t ln = 0;
        std::map<std::string, std::size_t> lines;
        while (std::getline(in, raw)) {
            ++ln;
            auto line = text::trim(raw);
            if (line.empty() || line[0] == '#') continue;
            auto f = text::split(line, '|');
            if (f.size() < 4) throw ParseError(source, ln, "expected 'S <id> <pos> | words | hyp:... | hypo:...'");
            auto head = text::words(f[0]);
            if (head.size() != 3 || head[0] != "S") throw ParseError(source, ln, "record must start with 'S <id> <pos>'");
            Synset s;
            s.id = head[1];
            auto p = parse_pos(head[2]);
            if (!p || *p == Pos::INT) throw ParseError(source, ln, "unknown synset part of speech '" + head[2] + "'");
            s.pos = *p;
            for (auto& w : text::split(f[1], ';')) {
                auto t = text::join(text::words(w), " ");
                if (!t.empty()) s.members.push_back(t);
            }
            if (s.members.empty()) throw ParseError(source, ln, "synset has no members");
            s.hypernyms = ids(f[2], "hyp:", source, ln);
            s.hyponyms = ids(f[3], "hypo:", source, ln);
            if (f.size() > 4) {
                auto g = std::string(text::trim(f[4]));
                if (text::starts_with(g, "gloss:")) g = std::string(text::trim(std::string_view(g).substr(6)));
                s.gloss = g;
            }
            if (d.by_id_.count(s.id)) throw ParseError(source, ln, "duplicate synset id " + s.id);
            lines[s.id] = ln;
            d.by_id_[s.id] = d.synsets_.size();
            d.synsets_.push_back(std::move(s));
        }
        // every link must resolve; close the hypernym/hyponym relation under symmetry
        for (auto& s : d.synsets_)
            for (auto* list : {&s.hypernyms, &s.hyponyms})
                for (auto& id : *list)
                    if (!d.by_id_.count(id)) throw ParseError(source, lines[s.id], "unknown synset id " + id);
        for (std::size_t i = 0; i < d.synsets_.size(); ++i) {
            for (auto& h : std::vector<std::string>(d.synsets_[i].hypernyms)) add_unique(d.at(h).hyponyms, d.synsets_[i].id);
            for (auto& h : std::vector<std::string>(d.synsets_[i].hyponyms)) add_unique(d.at(h).hypernyms, d.synsets_[i].id);
        }
        return d;
    }

    static SynsetDump load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open synset dump " + path);
        return parse(in, path);
    }

    const Synset& at(const std::string& id) const { return synsets_.at(by_id_.at(id)); }
    Synset& at(const std::string& id) { return synsets_.at(by_id_.at(id)); }
    const std::vector<Synset>& synsets() const { return synsets_; }

private:
    static std::vector<std::string> ids(std::string_view field, std::string_view tag, const std::string& src,
                                        std::size_t ln) {
        auto f = text::trim(field);
        if (!text::starts_with(f, tag)) throw ParseError(src, ln, "expected '" + std::string(tag) + "'");
        std::vector<std::string> out;
        for (auto& id : text::split(f.substr(tag.size()), ',')) {
            auto t = std::string(text::trim(id));
            if (!t.empty()) out.push_back(t);
        }
        return out;
    }
    static void add_unique(std::vector<std::string>& v, const std::string& id) {
        if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
    }

    std::vector<Synset> synsets_;
    std::map<std::string, std::size_t> by_id_;
};

struct MiniNet {
    const Synset* focus = nullptr;
    std::vector<const Synset*> hypernyms;
    std::vector<const Synset*> hyponyms;      // of the focus, used for labelling
    std::vector<const Synset*> coordinates;   // hypernyms plus their immediate hyponyms
};

// Single words match when their candidate lemmas meet; phrases only verbatim.
inline bool terms_match(const Morphology& morph, const std::string& a, const std::string& b) {
    auto x = text::normalize(a), y = text::normalize(b);
    if (x == y) return true;
    if (x.find(' ') != std::string::npos || y.find(' ') != std::string::npos) return false;
    auto bx = morph.base_forms(x), by = morph.base_forms(y);
    return std::any_of(bx.begin(), bx.end(), [&](const std::string& f) { return by.count(f) != 0; });
}

inline std::vector<MiniNet> build_mininets(const std::string& word, const SynsetDump& dump, std::optional<Pos> pos,
                                           const Morphology& morph) {
    std::vector<MiniNet> out;
    for (auto& s : dump.synsets()) {
        if (pos && s.pos != *pos) continue;
        if (std::none_of(s.members.begin(), s.members.end(), [&](auto& m) { return terms_match(morph, m, word); }))
            continue;
        MiniNet m;
        m.focus = &s;
        std::set<std::string> co;
        for (auto& h : s.hypernyms) {
            m.hypernyms.push_back(&dump.at(h));
            if (co.insert(h).second) m.coordinates.push_back(&dump.at(h));
            for (auto& sib : dump.at(h).hyponyms)
                if (co.insert(sib).second) m.coordinates.push_back(&dump.at(sib));
        }
        for (auto& h : s.hyponyms) m.hyponyms.push_back(&dump.at(h));
        out.push_back(std::move(m));
    }
    return out;
}

struct AlignWeights {
    double synonym = 1, hypernym = 1, coordinate = 1;
    void validate() const {
        if (synonym < 0 || hypernym < 0 || coordinate < 0) throw ConfigError("alignment weights must be non-negative");
    }
};

struct AlignmentScore {
    std::size_t synonym = 0, hypernym = 0, coordinate = 0;   // overlap counts
    double value = 0;
};

// Words of the paragraph plus the keywords its cross-references point at,
// each counted once.
inline std::vector<std::string> paragraph_terms(const Paragraph& p) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& w) {
        if (seen.insert(text::normalize(w)).second) out.push_back(text::normalize(w));
    };
    for (auto& g : p.groups) {
        for (auto& w : g.words) add(w);
        for (auto& r : g.relations) add(r.target_keyword);
    }
    return out;
}

inline std::size_t overlap(const Morphology& morph, const std::vector<std::string>& terms,
                           const std::vector<const Synset*>& synsets) {
    std::size_t n = 0;
    for (auto& t : terms) {
        bool hit = false;
        for (auto* s : synsets) {
            for (auto& m : s->members)
                if (terms_match(morph, t, m)) {
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        n += hit;
    }
    return n;
}

inline AlignmentScore score_alignment(const MiniNet& m, const Paragraph& p, const AlignWeights& w,
                                      const Morphology& morph) {
    w.validate();
    auto terms = paragraph_terms(p);
    AlignmentScore a;
    a.synonym = overlap(morph, terms, {m.focus});
    a.hypernym = overlap(morph, terms, m.hypernyms);
    a.coordinate = overlap(morph, terms, m.coordinates);
    a.value = w.synonym * static_cast<double>(a.synonym) + w.hypernym * static_cast<double>(a.hypernym) +
              w.coordinate * static_cast<double>(a.coordinate);
    return a;
}

struct AlignmentCell {
    SenseKey sense;
    std::string synset_id;
    AlignmentScore score;
};

struct AlignOptions {
    AlignWeights weights;
    bool all_cells = false;
    bool one_best = false;
};

struct AlignmentResult {
    std::string word;
    std::vector<AlignmentCell> matrix;    // every paragraph x mini-net cell of matching POS
    std::vector<AlignmentCell> aligned;   // the global maximum cell(s)
    std::string note;
};

inline AlignmentResult align_word(const std::string& word, const Index& idx, const SynsetDump& dump,
                                  const AlignOptions& opt = {}) {
    opt.weights.validate();
    AlignmentResult r;
    r.word = word;
    const auto& morph = idx.resources().morph;
    auto hits = idx.lookup(word);
    auto nets = build_mininets(word, dump, std::nullopt, morph);
    if (hits.empty() && nets.empty()) {
        r.note = "'" + word + "' is in neither resource";
        return r;
    }
    for (auto& n : nets)
        for (auto& h : hits) {
            if (h.sense.pos == Pos::INT || h.sense.pos != n.focus->pos) continue;
            r.matrix.push_back({h.sense, n.focus->id, score_alignment(n, idx.kb().resolve(h.sense), opt.weights, morph)});
        }
    double best = 0;
    for (auto& c : r.matrix) best = std::max(best, c.score.value);
    if (best <= 0) {
        r.note = "no overlap between '" + word + "' paragraphs and synsets";
        return r;
    }
    for (auto& c : r.matrix)
        if (c.score.value == best) r.aligned.push_back(c);
    std::sort(r.aligned.begin(), r.aligned.end(), [](const AlignmentCell& a, const AlignmentCell& b) {
        return std::tie(a.sense.head, a.synset_id, a.sense) < std::tie(b.sense.head, b.synset_id, b.sense);
    });
    if (opt.one_best) r.aligned.resize(1);
    return r;
}

inline std::string format_weight(double v) {
    std::ostringstream o;
    o << v;
    return o.str();
}

inline std::string render_alignment_tsv(const KnowledgeBase& kb, const AlignmentResult& r, bool all_cells) {
    std::ostringstream o;
    for (auto& c : all_cells ? r.matrix : r.aligned)
        o << r.word << "\t" << c.sense.head << "\t" << kb.resolve(c.sense).keyword << "\t" << pos_label(c.sense.pos)
          << "\t" << c.synset_id << "\t" << format_weight(c.score.value) << "\n";
    return o.str();
}

enum class RelationLabel { synonym, hypernym, hyponym, none };

inline std::string_view label_text(RelationLabel l) {
    switch (l) {
    case RelationLabel::synonym: return "Synonym";
    case RelationLabel::hypernym: return "Hypernym";
    case RelationLabel::hyponym: return "Hyponym";
    case RelationLabel::none: return "No label";
    }
    return "?";
}

struct LabeledGroup {
    std::size_t group = 0;
    RelationLabel label = RelationLabel::none;
};

// Tag each semicolon group by the closest mini-net relation it shares a
// word with. The paragraph keyword itself is left out, since it is the word
// the mini-nets were built for.
inline std::vector<LabeledGroup> label_paragraph(const Paragraph& p, std::span<const MiniNet> nets,
                                                 const Morphology& morph) {
    std::vector<const Synset*> focus, hyper, hypo;
    for (auto& n : nets) {
        if (n.focus) focus.push_back(n.focus);
        hyper.insert(hyper.end(), n.hypernyms.begin(), n.hypernyms.end());
        hypo.insert(hypo.end(), n.hyponyms.begin(), n.hyponyms.end());
    }
    std::vector<LabeledGroup> out;
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
        std::vector<std::string> terms;
        for (auto& w : p.groups[i].words)
            if (text::normalize(w) != p.sense.keyword) terms.push_back(w);
        for (auto& r : p.groups[i].relations) terms.push_back(r.target_keyword);
        RelationLabel l = RelationLabel::none;
        if (overlap(morph, terms, focus))
            l = RelationLabel::synonym;
        else if (overlap(morph, terms, hyper))
            l = RelationLabel::hypernym;
        else if (overlap(morph, terms, hypo))
            l = RelationLabel::hyponym;
        out.push_back({i, l});
    }
    return out;
}

inline std::string render_group(const Paragraph& p, const SemicolonGroup& g) {
    std::vector<std::string> ws;
    for (auto& w : g.words)
        if (text::normalize(w) != p.sense.keyword) ws.push_back(w);
    std::string s = text::join(ws, ", ");
    for (std::size_t i = 0; i < g.relations.size(); ++i)
        s += std::string(i == 0 && !s.empty() ? " " : i ? ", " : "") + std::to_string(g.relations[i].target_head) + " " +
             g.relations[i].target_keyword;
    return s;
}

inline std::string render_labels(const Paragraph& p, const std::vector<LabeledGroup>& labels) {
    std::ostringstream o;
    o << pos_label(p.sense.pos) << " " << p.keyword << "\n";
    for (auto l : {RelationLabel::synonym, RelationLabel::hypernym, RelationLabel::hyponym, RelationLabel::none}) {
        std::vector<std::string> parts;
        for (auto& lg : labels)
            if (lg.label == l) {
                auto g = render_group(p, p.groups[lg.group]);
                if (!g.empty()) parts.push_back(g);
            }
        if (parts.empty()) continue;
        o << "\n" << label_text(l) << (l == RelationLabel::none ? " : " : ": ") << text::join(parts, "; ") << ".\n";
    }
    return o.str();
}

} // namespace lexkb

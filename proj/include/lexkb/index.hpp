#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kb.hpp"
#include "morph.hpp"
#include "stoplist.hpp"
#include "variants.hpp"

namespace lexkb {

// Word lists that shape lookup: exception files, spelling variants, stop list.
struct Resources {
    Morphology morph;
    VariantTable variants;
    StopList stop;

    // Expects stoplist.txt, ambr.tsv and exc/{noun,verb,adj,adv}.exc under dir.
    static Resources load(const std::filesystem::path& dir) {
        Resources r;
        r.stop.load((dir / "stoplist.txt").string());
        r.variants.load((dir / "ambr.tsv").string());
        r.morph.load_exceptions(Pos::N, (dir / "exc" / "noun.exc").string());
        r.morph.load_exceptions(Pos::VB, (dir / "exc" / "verb.exc").string());
        r.morph.load_exceptions(Pos::ADJ, (dir / "exc" / "adj.exc").string());
        r.morph.load_exceptions(Pos::ADV, (dir / "exc" / "adv.exc").string());
        return r;
    }
};

struct Posting {
    SenseKey sense;
    std::string entry;   // the group member that produced this posting
    bool literal;        // false when indexed through a constituent of a phrase
    bool operator==(const Posting&) const = default;
};

// One lookup result per sense.
struct Hit {
    SenseKey sense;
    std::string matched;                    // index key that reached the sense
    bool literal = false;
    std::vector<std::string> literal_forms; // keys that occur verbatim in the paragraph
};

struct IndexOptions {
    bool phrase_split = true;   // index two-word phrases under each word
};

class Index {
public:
    Index(std::shared_ptr<const KnowledgeBase> kb, std::shared_ptr<const Resources> res, IndexOptions opt = {})
        : kb_(std::move(kb)), res_(std::move(res)), opt_(opt) {
        kb_->for_each_paragraph([&](const Head&, const Paragraph& p) {
            for (auto& g : p.groups)
                for (auto& w : g.words) add_word(p.sense, text::normalize(w));
        });
        for (auto& [k, v] : entries_) references_ += v.size();
    }

    const KnowledgeBase& kb() const { return *kb_; }
    const Resources& resources() const { return *res_; }
    std::shared_ptr<const KnowledgeBase> kb_ptr() const { return kb_; }
    std::shared_ptr<const Resources> resources_ptr() const { return res_; }
    const IndexOptions& options() const { return opt_; }

    std::size_t size() const { return entries_.size(); }
    std::size_t reference_count() const { return references_; }

    const std::vector<Posting>* entry(const std::string& surface) const {
        auto it = entries_.find(text::normalize(surface));
        return it == entries_.end() ? nullptr : &it->second;
    }

    // The query, its base forms and the spelling variants of each.
    std::set<std::string> lookup_forms(std::string_view query) const {
        auto q = text::normalize(query);
        std::set<std::string> forms{q};
        if (q.empty()) return {};
        auto bases = res_->morph.base_forms(q);
        forms.insert(bases.begin(), bases.end());
        for (auto& v : res_->variants.variants(q)) {
            forms.insert(v);
            auto vb = res_->morph.base_forms(v);
            forms.insert(vb.begin(), vb.end());
        }
        for (auto& b : bases) {
            auto vs = res_->variants.variants(b);
            forms.insert(vs.begin(), vs.end());
        }
        return forms;
    }

    // Deduplicated by sense, ordered by head, POS, keyword.
    std::vector<Hit> lookup(std::string_view query) const {
        auto q = text::normalize(query);
        std::map<SenseKey, Hit> by_sense;
        for (auto& f : lookup_forms(q)) {
            auto it = entries_.find(f);
            if (it == entries_.end()) continue;
            for (auto& p : it->second) {
                auto& h = by_sense[p.sense];
                bool fresh = h.matched.empty();
                h.sense = p.sense;
                if (p.literal) {
                    if (std::find(h.literal_forms.begin(), h.literal_forms.end(), f) == h.literal_forms.end())
                        h.literal_forms.push_back(f);
                    // prefer the query spelling itself, then any literal form
                    if (!h.literal || f == q) h.matched = f;
                    h.literal = true;
                } else if (fresh) {
                    h.matched = f;
                }
            }
        }
        std::vector<Hit> out;
        for (auto& [k, h] : by_sense) out.push_back(std::move(h));
        return out;
    }

    template <class F>
    void for_each_entry(F&& f) const {
        for (auto& [k, v] : entries_) f(k, v);
    }

private:
    void post(const std::string& key, const SenseKey& sense, const std::string& entry, bool literal) {
        auto& v = entries_[key];
        for (auto& p : v)
            if (p.sense == sense) {
                if (literal && !p.literal) p = Posting{sense, entry, true};
                return;
            }
        v.push_back(Posting{sense, entry, literal});
    }

    void add_word(const SenseKey& sense, const std::string& w) {
        post(w, sense, w, true);
        auto toks = text::words(w);
        if (toks.size() >= 2 && (toks[0] == "to" || toks[0] == "be")) {
            auto rest = w.substr(toks[0].size() + 1);
            post(rest, sense, w, false);
        }
        if (opt_.phrase_split && toks.size() == 2)
            for (auto& t : toks)
                if (!res_->stop.contains(t)) post(t, sense, w, false);
    }

    std::shared_ptr<const KnowledgeBase> kb_;
    std::shared_ptr<const Resources> res_;
    IndexOptions opt_;
    std::unordered_map<std::string, std::vector<Posting>> entries_;
    std::size_t references_ = 0;
};

} // namespace lexkb

// Command-line front end: one binary, one subcommand per engine capability.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexkb.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace lexkb;

namespace {

enum Exit { ok = 0, not_found = 1, bad_input = 2 };

struct Config {
    std::string kb, data, format = "text", pos;
    bool no_phrase_split = false;
    bool interactive = false;

    bool as_json() const { return format == "json"; }
    std::optional<Pos> pos_filter() const {
        if (pos.empty()) return std::nullopt;
        auto p = parse_pos(pos);
        if (!p) throw ConfigError("unknown part of speech '" + pos + "'");
        return p;
    }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// A KB directory holds one or more .kbt files, read in name order.
std::string corpus_text(const fs::path& kb) {
    if (!fs::exists(kb)) throw ConfigError("knowledge base not found: " + kb.string());
    if (!fs::is_directory(kb)) return read_file(kb);
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(kb))
        if (e.path().extension() == ".kbt") files.push_back(e.path());
    if (files.empty()) throw ConfigError("no .kbt files in " + kb.string());
    std::sort(files.begin(), files.end());
    std::string all;
    for (auto& f : files) all += read_file(f) + "\n";
    return all;
}

fs::path data_dir(const Config& c) {
    if (!c.data.empty()) return c.data;
    if (auto* e = std::getenv("LEXKB_DATA")) return e;
    return LEXKB_DEFAULT_DATA;
}

Engine open_engine(const Config& c, const IngestOptions& ingest = {}) {
    std::string kb = c.kb;
    if (kb.empty())
        if (auto* e = std::getenv("LEXKB_HOME")) kb = e;
    if (kb.empty()) throw ConfigError("no knowledge base: pass --kb or set LEXKB_HOME");
    IngestOptions opt = ingest;
    opt.source = kb;
    std::istringstream in(corpus_text(kb));
    IndexOptions io;
    io.phrase_split = !c.no_phrase_split;
    return Engine(parse_corpus(in, opt), Resources::load(data_dir(c)), io);
}

// "3", "1/3": JSON carries scores exactly
std::string exact(const Rational& r) {
    auto n = std::to_string(r.numerator());
    return r.denominator() == 1 ? n : n + "/" + std::to_string(r.denominator());
}

json sense_json(const KnowledgeBase& kb, const SenseKey& s) {
    return {{"head", s.head}, {"keyword", kb.resolve(s).keyword}, {"pos", pos_label(s.pos)}};
}

std::string group_text(const SemicolonGroup& g) {
    std::string s = text::join(g.words, ", ") + ";";
    for (auto& r : g.relations)
        s += std::string(" <") + (r.kind == RelationKind::see ? "see" : "cref") + ": " + std::to_string(r.target_head) +
             " " + r.target_keyword + ">";
    return s;
}

void show_paragraph(std::ostream& o, const KnowledgeBase& kb, const Hit& h) {
    const auto& p = kb.resolve(h.sense);
    auto marked = kb.groups_containing(h.sense, h.matched, h.literal_forms);
    o << "===== Head " << h.sense.head << " =====\n" << pos_label(h.sense.pos) << "\n";
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
        bool hit = std::find(marked.begin(), marked.end(), i) != marked.end();
        o << (hit ? "**" : "") << group_text(p.groups[i]) << (hit ? "**" : "") << "\n";
    }
}

int cmd_lookup(const Config& c, const std::string& word) {
    auto eng = open_engine(c);
    auto hits = filter_pos(eng.index.lookup(word), c.pos_filter());
    const auto& kb = *eng.kb;
    if (hits.empty()) {
        if (c.as_json())
            std::cout << json{{"word", word}, {"found", false}, {"references", json::array()}}.dump(2) << "\n";
        else
            std::cout << "'" << word << "' is not in the index\n";
        return not_found;
    }
    if (c.as_json()) {
        json refs = json::array();
        for (auto& h : hits) {
            auto j = sense_json(kb, h.sense);
            j["matched"] = h.matched;
            j["literal"] = h.literal;
            json groups = json::array();
            for (auto g : kb.groups_containing(h.sense, h.matched, h.literal_forms)) groups.push_back(g);
            j["groups"] = groups;
            refs.push_back(j);
        }
        std::cout << json{{"word", word}, {"found", true}, {"references", refs}}.dump(2) << "\n";
        return ok;
    }
    std::cout << "** " << text::normalize(word) << " **\n";
    for (std::size_t i = 0; i < hits.size(); ++i) {
        auto num = std::to_string(i + 1) + ".";
        std::cout << num << std::string(num.size() < 4 ? 4 - num.size() : 1, ' ') << describe(kb, hits[i]) << "\n";
    }
    if (c.interactive) {
        std::cout << "Enter the number of the reference to be looked up: " << std::flush;
        std::size_t n = 0;
        if (!(std::cin >> n) || n < 1 || n > hits.size()) {
            std::cout << "\nno such reference\n";
            return bad_input;
        }
        std::cout << "\n";
        show_paragraph(std::cout, kb, hits[n - 1]);
        return ok;
    }
    for (auto& h : hits) {
        std::cout << "\n";
        show_paragraph(std::cout, kb, h);
    }
    return ok;
}

int word_missing(const Config& c, const WordNotFound& e) {
    if (c.as_json())
        std::cout << json{{"error", "not_found"}, {"word", e.word}, {"argument", e.which}}.dump(2) << "\n";
    else
        std::cout << "'" << e.word << "' is not in the index\n";
    return not_found;
}

int cmd_distance(const Config& c, const std::string& w1, const std::string& w2) {
    auto eng = open_engine(c);
    try {
        int d = distance(eng.index, w1, w2, c.pos_filter());
        auto s2 = sim2_from_distance(d);
        if (c.as_json())
            std::cout << json{{"word1", w1},
                              {"word2", w2},
                              {"distance", d},
                              {"sim1", sim1_from_distance(d)},
                              {"sim2", exact(s2)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << d << "\n";
        return ok;
    } catch (const WordNotFound& e) {
        return word_missing(c, e);
    }
}

int cmd_paths(const Config& c, const std::string& w1, const std::string& w2, bool ascii) {
    auto eng = open_engine(c);
    const auto& kb = *eng.kb;
    try {
        auto ps = all_paths(eng.index, w1, w2, c.pos_filter());
        auto arrows = ascii ? ArrowStyle::ascii() : ArrowStyle{};
        if (c.as_json()) {
            json paths = json::array();
            for (auto& p : ps.paths)
                paths.push_back({{"from", sense_json(kb, p.ref1.sense)},
                                 {"to", sense_json(kb, p.ref2.sense)},
                                 {"length", p.length},
                                 {"chain", render_chain(p, arrows)}});
            std::cout << json{{"word1", w1},
                              {"word2", w2},
                              {"min_length", ps.min_length},
                              {"min_path_count", ps.min_path_count},
                              {"paths", paths}}
                             .dump(2)
                      << "\n";
            return ok;
        }
        std::cout << "Path between " << w1 << " and " << w2 << " (" << ps.paths.size() << " paths in total)\n";
        for (auto& p : ps.paths) std::cout << "\n" << render_header(kb, p) << "\n" << render_chain(p, arrows) << "\n";
        return ok;
    } catch (const WordNotFound& e) {
        return word_missing(c, e);
    }
}

json choice_json(const ChoiceReport& r) {
    json j{{"choice", r.choice}, {"found", r.found}, {"distance", r.distance}, {"path_count", r.path_count}};
    if (r.decomposed) j["decomposed"] = true;
    return j;
}

int cmd_quiz(const Config& c, const std::string& file, bool partial) {
    auto qs = load_questions(file);
    auto eng = open_engine(c);
    QuizOptions opt;
    opt.partial_credit = partial;
    auto res = run_quiz(eng.index, qs, opt);
    if (!c.as_json()) {
        std::cout << render_quiz(res, opt);
        return ok;
    }
    json items = json::array();
    for (auto& q : res.questions) {
        json ch = json::array();
        for (auto& r : q.choices) ch.push_back(choice_json(r));
        items.push_back({{"problem", q.question.problem},
                         {"choices", ch},
                         {"chosen", q.chosen},
                         {"verdict", verdict_label(q.verdict)},
                         {"score", exact(q.score)},
                         {"tie_broken", q.tie_broken},
                         {"tie_lost", q.tie_lost},
                         {"residual_tie", q.residual_tie}});
    }
    std::cout << json{{"questions", items},
                      {"total", res.questions.size()},
                      {"score", exact(res.score)},
                      {"percent", res.percent()},
                      {"correct", res.correct},
                      {"incorrect", res.incorrect},
                      {"ties", res.ties},
                      {"ties_broken", res.ties_broken},
                      {"ties_lost", res.ties_lost},
                      {"residual_ties", res.residual_ties},
                      {"question_not_found", res.questions_not_found},
                      {"answer_not_found", res.answer_words_not_found},
                      {"other_not_found", res.other_words_not_found}}
                     .dump(2)
              << "\n";
    return ok;
}

int cmd_correlate(const Config& c, const std::string& file) {
    auto rows = load_judgments(file);
    auto eng = open_engine(c);
    auto rep = correlate(eng.index, rows);
    if (c.as_json()) {
        std::cout << json{{"pairs", rep.pairs}, {"not_found", rep.not_found}, {"r", rep.r}}.dump(2) << "\n";
        return ok;
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::cout << rows[i].word1 << "\t" << rows[i].word2 << "\t" << rows[i].human << "\t" << rep.sim1[i] << "\n";
    std::cout << "pairs: " << rep.pairs << ", not in index: " << rep.not_found << ", r = " << rep.r << "\n";
    return ok;
}

int cmd_chains(const Config& c, const std::string& file, bool stats) {
    auto input = read_file(file);
    auto eng = open_engine(c);
    auto run = build_chains(eng.index, input);
    if (c.as_json()) {
        json chains = json::array();
        for (auto& ch : run.chains) {
            json members = json::array();
            for (auto m : ch.members)
                members.push_back({{"word", run.candidates[m].surface}, {"sentence", run.candidates[m].sentence}});
            chains.push_back({{"sense", sense_json(*eng.kb, ch.anchor)},
                              {"score", format_decimal(ch.score)},
                              {"line", ch.start_line},
                              {"members", members}});
        }
        std::cout << json{{"sentences", run.text.sentences.size()},
                          {"candidates", run.stats.candidates},
                          {"relation_tests", run.stats.relation_tests},
                          {"proto_chains", run.stats.proto_chains},
                          {"chains", chains}}
                         .dump(2)
                  << "\n";
        return ok;
    }
    for (auto& ch : run.chains) std::cout << render_chain(ch, run.candidates) << "\n";
    if (stats)
        std::cout << "\nsentences: " << run.text.sentences.size() << "\ncandidates: " << run.stats.candidates
                  << "\nproto-chains: " << run.stats.proto_chains << "\nrelation tests: " << run.stats.relation_tests
                  << "\n";
    return ok;
}

int cmd_align(const Config& c, const std::string& target, const std::string& dump_path, const AlignOptions& opt,
              bool label) {
    auto dump = SynsetDump::load(dump_path);
    auto eng = open_engine(c);
    std::vector<std::string> words;
    if (fs::is_regular_file(target)) {
        std::istringstream in(read_file(target));
        for (std::string l; std::getline(in, l);)
            if (auto w = text::normalize(l); !w.empty() && w[0] != '#') words.push_back(w);
    } else {
        words.push_back(target);
    }
    json out = json::array();
    bool any = false;
    for (auto& w : words) {
        auto r = align_word(w, eng.index, dump, opt);
        any |= !r.aligned.empty();
        if (c.as_json()) {
            json cells = json::array();
            for (auto& cell : opt.all_cells ? r.matrix : r.aligned) {
                auto j = sense_json(*eng.kb, cell.sense);
                j["synset"] = cell.synset_id;
                j["score"] = cell.score.value;
                cells.push_back(j);
            }
            json labels = json::array();
            if (label)
                for (auto& cell : r.aligned) {
                    auto nets = build_mininets(w, dump, cell.sense.pos, eng.resources->morph);
                    const auto& p = eng.kb->resolve(cell.sense);
                    for (auto& lg : label_paragraph(p, nets, eng.resources->morph))
                        labels.push_back({{"head", cell.sense.head},
                                          {"group", lg.group},
                                          {"label", label_text(lg.label)},
                                          {"text", render_group(p, p.groups[lg.group])}});
                }
            if (label) {
                out.push_back({{"word", w}, {"cells", cells}, {"note", r.note}, {"labels", labels}});
                continue;
            }
            out.push_back({{"word", w}, {"cells", cells}, {"note", r.note}});
            continue;
        }
        if (!r.note.empty()) std::cerr << r.note << "\n";
        std::cout << render_alignment_tsv(*eng.kb, r, opt.all_cells);
        if (label)
            for (auto& cell : r.aligned) {
                auto nets = build_mininets(w, dump, cell.sense.pos, eng.resources->morph);
                const auto& p = eng.kb->resolve(cell.sense);
                std::cout << "\n" << render_labels(p, label_paragraph(p, nets, eng.resources->morph));
            }
    }
    if (c.as_json()) std::cout << out.dump(2) << "\n";
    return any ? ok : not_found;
}

int cmd_stats(const Config& c) {
    auto eng = open_engine(c);
    auto s = eng.kb->stats();
    if (c.as_json()) {
        std::cout << json{{"heads", s.heads},
                          {"paragraphs", s.paragraphs},
                          {"groups", s.groups},
                          {"words", s.words},
                          {"relations", s.relations},
                          {"index_entries", eng.index.size()},
                          {"references", eng.index.reference_count()},
                          {"warnings", eng.warnings.size() + eng.kb->warnings().size()}}
                         .dump(2)
                  << "\n";
        return ok;
    }
    std::cout << "heads: " << s.heads << "\nparagraphs: " << s.paragraphs << "\ngroups: " << s.groups
              << "\nwords: " << s.words << "\nrelations: " << s.relations << "\nindex entries: " << eng.index.size()
              << "\nreferences: " << eng.index.reference_count() << "\n";
    return ok;
}

int cmd_ingest(const Config& c, const std::string& file, bool strict, const std::string& out_path) {
    IngestOptions opt;
    opt.strict = strict;
    opt.source = file;
    auto res = parse_corpus_file(file, opt);
    auto s = res.kb.stats();
    auto warnings = res.warnings;
    warnings.insert(warnings.end(), res.kb.warnings().begin(), res.kb.warnings().end());
    if (!out_path.empty()) {
        std::ofstream o(out_path, std::ios::binary);
        if (!o) throw ConfigError("cannot write " + out_path);
        o << serialize(res.kb);
    }
    if (c.as_json()) {
        std::cout << json{{"heads", s.heads},
                          {"paragraphs", s.paragraphs},
                          {"groups", s.groups},
                          {"words", s.words},
                          {"skipped_groups", res.skipped_groups},
                          {"warnings", warnings}}
                         .dump(2)
                  << "\n";
        return ok;
    }
    std::cout << "loaded " << s.heads << " heads, " << s.paragraphs << " paragraphs, " << s.groups << " groups, "
              << s.words << " words\n";
    std::cout << res.skipped_groups << " groups skipped, " << warnings.size() << " warnings\n";
    for (auto& w : warnings) std::cout << "warning: " << w << "\n";
    return ok;
}

// The original menu loop, kept for hands-on use.
int menu(const Config& c) {
    auto eng = open_engine(c);
    for (;;) {
        std::cout << "\n1. Look up a word or phrase\n2. Look up a pair of words or phrases\n3. Quit\n\n" << std::flush;
        std::string choice;
        if (!std::getline(std::cin, choice) || text::trim(choice) == "3") return ok;
        if (text::trim(choice) == "1") {
            std::cout << "Enter a word or phrase: " << std::flush;
            std::string w;
            std::getline(std::cin, w);
            auto hits = eng.index.lookup(w);
            if (hits.empty()) {
                std::cout << "'" << w << "' is not in the index\n";
                continue;
            }
            for (std::size_t i = 0; i < hits.size(); ++i) std::cout << i + 1 << ". " << describe(*eng.kb, hits[i]) << "\n";
            std::cout << "Enter the number of the reference to be looked up: " << std::flush;
            std::string n;
            std::getline(std::cin, n);
            std::size_t k = std::strtoul(n.c_str(), nullptr, 10);
            if (k >= 1 && k <= hits.size()) show_paragraph(std::cout, *eng.kb, hits[k - 1]);
        } else if (text::trim(choice) == "2") {
            std::string a, b;
            std::cout << "Enter a word or phrase: " << std::flush;
            std::getline(std::cin, a);
            std::cout << "Enter a second word or phrase: " << std::flush;
            std::getline(std::cin, b);
            try {
                auto ps = all_paths(eng.index, a, b);
                std::cout << "Path between " << a << " and " << b << " (" << ps.paths.size() << " paths in total)\n";
                std::cout << render_header(*eng.kb, ps.paths.front()) << "\n"
                          << render_chain(ps.paths.front(), ArrowStyle::ascii()) << "\n";
            } catch (const WordNotFound& e) {
                std::cout << "'" << e.word << "' is not in the index\n";
            }
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thesaurus knowledge base: lookup, distance, quiz, chains, alignment"};
    app.require_subcommand(0, 1);
    Config cfg;
    app.add_option("--kb", cfg.kb, "knowledge base file or directory of .kbt files (default: $LEXKB_HOME)");
    app.add_option("--data", cfg.data, "directory with stoplist.txt, ambr.tsv and exc/");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--pos", cfg.pos, "restrict references to one part of speech");
    app.add_flag("--no-phrase-split", cfg.no_phrase_split, "do not index two-word phrases under their words");
    app.add_flag("--interactive", cfg.interactive, "prompt for selections");

    std::string a, b, file, dump, out;
    bool strict = false, ascii = false, partial = false, stats = false, label = false;
    AlignOptions aopt;

    auto* ingest = app.add_subcommand("ingest", "parse a corpus file and report");
    ingest->add_option("file", file)->required();
    ingest->add_flag("--strict", strict, "reject noisy groups instead of skipping them");
    ingest->add_option("--out", out, "write the normalized serialization here");
    ingest->add_flag("--stats", stats, "accepted for symmetry; counts are always printed");

    auto* lookup = app.add_subcommand("lookup", "list the references of a word");
    lookup->add_option("word", a)->required();

    auto* dist = app.add_subcommand("distance", "shortest path length between two words");
    dist->add_option("word1", a)->required();
    dist->add_option("word2", b)->required();

    auto* paths = app.add_subcommand("paths", "every path between two words");
    paths->add_option("word1", a)->required();
    paths->add_option("word2", b)->required();
    paths->add_flag("--ascii", ascii, "draw arrows as --> and <--");

    auto* quiz = app.add_subcommand("quiz", "answer a synonym question file");
    quiz->add_option("file", file)->required();
    quiz->add_flag("--partial-credit", partial, "score a k-way tie as 1/k");

    auto* corr = app.add_subcommand("correlate", "correlate sim1 with human judgments");
    corr->add_option("file", file)->required();

    auto* chains = app.add_subcommand("chains", "build lexical chains for a text file");
    chains->add_option("file", file)->required();
    chains->add_flag("--stats", stats, "print pipeline counters");

    auto* align = app.add_subcommand("align", "align paragraphs of a word (or a word list file) with synsets");
    align->add_option("target", a)->required();
    align->add_option("--dump", dump, "synset dump")->required();
    align->add_flag("--all-cells", aopt.all_cells, "print the whole score matrix");
    align->add_flag("--one-best", aopt.one_best, "keep one cell when the maximum is shared");
    align->add_flag("--label", label, "label the aligned paragraph's groups");
    align->add_option("--weights", [&](const CLI::results_t& r) {
        auto parts = text::split(r.front(), ',');
        if (parts.size() != 3) return false;
        aopt.weights = {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
        return true;
    }, "synonym,hypernym,coordinate weights");

    auto* stat = app.add_subcommand("stats", "knowledge base census");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : bad_input;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(cfg, file, strict, out);
        if (lookup->parsed()) return cmd_lookup(cfg, a);
        if (dist->parsed()) return cmd_distance(cfg, a, b);
        if (paths->parsed()) return cmd_paths(cfg, a, b, ascii);
        if (quiz->parsed()) return cmd_quiz(cfg, file, partial);
        if (corr->parsed()) return cmd_correlate(cfg, file);
        if (chains->parsed()) return cmd_chains(cfg, file, stats);
        if (align->parsed()) return cmd_align(cfg, a, dump, aopt, label);
        if (stat->parsed()) return cmd_stats(cfg);
        if (cfg.interactive) return menu(cfg);
        std::cout << app.help();
        return bad_input;
    } catch (const NotFound& e) {
        std::cerr << "lexkb: " << e.what() << "\n";
        return not_found;
    } catch (const std::exception& e) {
        std::cerr << "lexkb: " << e.what() << "\n";
        return bad_input;
    }
}

#include <gtest/gtest.h>

#include <random>

#include "oracle/graph_distance.hpp"
#include "oracle/synthetic_kb.hpp"
#include "support.hpp"

using namespace lexkb;
using namespace testing_support;

namespace {

struct Rung {
    std::string a, b;
    int level;
};

const std::vector<Rung>& ladder() {
    static const std::vector<Rung> r{{"journey's end", "terminus", 0},     {"devotion", "abnormal affection", 2},
                                     {"popular misconception", "glaring error", 4}, {"individual", "lonely", 6},
                                     {"finance", "apply for a loan", 8},   {"life expectancy", "herbalize", 10},
                                     {"Creirwy (love)", "inspired", 12},   {"translucid", "blind eye", 14},
                                     {"nag", "like greased lightning", 16}};
    return r;
}

} // namespace

TEST(Distance, LadderOneRungPerLevel) {
    auto& idx = engine("mini.kbt").index;
    for (auto& r : ladder()) EXPECT_EQ(distance(idx, r.a, r.b), r.level) << r.a << " / " << r.b;
}

TEST(Distance, Basics) {
    auto& idx = engine("mini.kbt").index;
    EXPECT_EQ(distance(idx, "cat", "cat"), 0);
    EXPECT_EQ(distance(idx, "feline", "lynx"), 2);
    EXPECT_EQ(distance(idx, "God", "Yahweh"), 2);
    EXPECT_THROW(distance(idx, "qwzzk", "cat"), WordNotFound);
    try {
        distance(idx, "cat", "qwzzk");
    } catch (const WordNotFound& e) {
        EXPECT_EQ(e.which, 2);
    }
}

TEST(Distance, PhraseSplitSideEffect) {
    EXPECT_EQ(distance(engine("mini.kbt").index, "food", "rooster"), 4);
    EXPECT_GT(distance(engine("mini.kbt", false).index, "food", "rooster"), 4);
}

TEST(Paths, FelineLynx) {
    auto& eng = engine("mini.kbt");
    auto ps = all_paths(eng.index, "feline", "lynx");
    std::vector<int> lengths;
    for (auto& p : ps.paths) lengths.push_back(p.length);
    EXPECT_EQ(lengths, (std::vector<int>{2, 6, 12, 12, 16, 16}));
    EXPECT_EQ(ps.min_length, 2);
    EXPECT_EQ(ps.min_path_count, 1u);
    EXPECT_EQ(render_header(*eng.kb, ps.paths[0]), "Path between feline (cat 365 N.) and lynx (cat 365 N.) [length = 2]");
    EXPECT_EQ(render_chain(ps.paths[0]), "feline → cat ← lynx");
    EXPECT_EQ(render_chain(ps.paths[1]), "feline → animal → ADJ. → 365. Animality. Animal ← N. ← cat ← lynx");
    EXPECT_EQ(render_chain(ps.paths[4]),
              "feline → cunning → ADJ. → 698. Cunning → [698, 699] → Complex → Section three : Voluntary action → "
              "Class six : Volition: individual volition → T ← Class three : Matter ← Section three : Organic matter ← "
              "Vitality ← [365, 366] ← 365. Animality. Animal ← N. ← cat ← lynx");
}

TEST(Paths, AsciiArrowsAndZeroLength) {
    auto& idx = engine("mini.kbt").index;
    auto ps = all_paths(idx, "God", "Yahweh");
    EXPECT_EQ(render_chain(ps.paths[0], ArrowStyle::ascii()), "God --> the Deity <-- Yahweh");
    auto same = all_paths(idx, "journey's end", "terminus");
    EXPECT_EQ(render_chain(same.paths[0]), "journey's end ↔ terminus");
}

TEST(Paths, PosFilter) {
    auto& idx = engine("mini.kbt").index;
    auto ps = all_paths(idx, "feline", "lynx", Pos::N);
    ASSERT_EQ(ps.paths.size(), 2u);
    EXPECT_THROW(all_paths(idx, "feline", "lynx", Pos::VB), WordNotFound);
}

TEST(Similarity, EquationIdentities) {
    auto& idx = engine("mini.kbt").index;
    for (auto& r : ladder()) {
        int d = distance(idx, r.a, r.b);
        EXPECT_EQ(sim1(idx, r.a, r.b), 16 - d);
        EXPECT_EQ(sim2(idx, r.a, r.b), Rational(1, 1 + d));
    }
    EXPECT_EQ(sim2_from_distance(0), Rational(1));
    EXPECT_EQ(sim2_from_distance(16), Rational(1, 17));
}

TEST(Similarity, ThesauralRelations) {
    auto& idx = engine("mini.kbt").index;
    EXPECT_EQ(t1_relation(idx, "cat", "Cat"), ThesauralRelation::T0);
    EXPECT_EQ(t1_relation(idx, "feline", "lynx"), ThesauralRelation::T1);
    EXPECT_EQ(t1_relation(idx, "feline", "debt"), ThesauralRelation::none);
}

// Oracle: explicit tree + BFS, on synthetic KBs.
TEST(DistanceOracle, SyntheticKbsAgreeWithGraphSearch) {
    for (unsigned seed = 1; seed <= 12; ++seed) {
        auto corpus = oracle::synthetic_corpus(seed);
        auto eng = engine_from_text(corpus, false);
        oracle::TaxonomyGraph g(*eng.kb);
        auto words = g.words();
        for (auto& a : words)
            for (auto& b : words) ASSERT_EQ(distance(eng.index, a, b), g.distance(a, b)) << "seed " << seed << ": " << a << "/" << b << "\n" << corpus;
    }
}

TEST(DistanceProperties, AxiomsOnFixture) {
    auto& idx = engine("mini.kbt").index;
    std::vector<std::string> words;
    idx.for_each_entry([&](const std::string& k, const std::vector<Posting>&) { words.push_back(k); });
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 500; ++i) {
        auto& x = words[pick(rng)];
        auto& y = words[pick(rng)];
        int d = distance(idx, x, y);
        EXPECT_EQ(d, distance(idx, y, x));
        EXPECT_TRUE(d >= 0 && d <= 16 && d % 2 == 0);
        EXPECT_EQ(distance(idx, x, x), 0);
    }
}

// At the level of single references the taxonomy is a tree, so the triangle
// inequality holds there.
TEST(DistanceProperties, TriangleHoldsForReferences) {
    auto& eng = engine("mini.kbt");
    std::vector<Hit> refs;
    eng.kb->for_each_paragraph([&](const Head&, const Paragraph& p) {
        for (auto& g : p.groups) {
            Hit h;
            h.sense = p.sense;
            h.matched = text::normalize(g.words.front());
            h.literal = true;
            h.literal_forms = {h.matched};
            refs.push_back(h);
        }
    });
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, refs.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        auto& a = refs[pick(rng)];
        auto& b = refs[pick(rng)];
        auto& c = refs[pick(rng)];
        EXPECT_LE(reference_distance(*eng.kb, a, c),
                  reference_distance(*eng.kb, a, b) + reference_distance(*eng.kb, b, c));
    }
}

// Across words, a polysemous middle word can bridge two distant words.
TEST(DistanceProperties, PolysemyBreaksWordTriangle) {
    auto eng = engine_from_text(
        "#class 1 | one\n#section 1 | s\n#head 1 | a\n#pos N.\n#para alpha\nalpha; bridge\n"
        "#class 2 | two\n#section 1 | s\n#head 2 | b\n#pos N.\n#para omega\nomega; bridge\n");
    auto& idx = eng.index;
    EXPECT_EQ(distance(idx, "alpha", "bridge"), 0);
    EXPECT_EQ(distance(idx, "bridge", "omega"), 0);
    EXPECT_EQ(distance(idx, "alpha", "omega"), 16);
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace lexkb;
using namespace testing_support;

namespace {

std::vector<SenseKey> senses(const std::vector<Hit>& hits) {
    std::vector<SenseKey> out;
    for (auto& h : hits) out.push_back(h.sense);
    return out;
}

struct RuleCase {
    std::string input, base;
};

} // namespace

TEST(Morphology, TwentyRules) { EXPECT_EQ(detachment_rules().size(), 20u); }

TEST(Morphology, EveryRuleFires) {
    // one constructed input per rule, in table order
    std::vector<RuleCase> cases{{"cats", "cat"},       {"buses", "bus"},     {"boxes", "box"},      {"buzzes", "buzz"},
                                {"churches", "church"}, {"bushes", "bush"},   {"men", "man"},        {"flies", "fly"},
                                {"runs", "run"},       {"tries", "try"},     {"writes", "write"},   {"goes", "go"},
                                {"hoped", "hope"},     {"walked", "walk"},   {"hoping", "hope"},    {"walking", "walk"},
                                {"taller", "tall"},    {"tallest", "tall"},  {"larger", "large"},   {"largest", "large"}};
    Morphology bare;
    const auto& rules = detachment_rules();
    ASSERT_EQ(cases.size(), rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        auto forms = bare.base_forms(cases[i].input);
        EXPECT_TRUE(forms.count(cases[i].base)) << cases[i].input;
        auto fired = bare.matching_rules(cases[i].input);
        EXPECT_NE(std::find(fired.begin(), fired.end(), &rules[i]), fired.end()) << "rule " << i;
    }
}

TEST(Morphology, SurfaceAlwaysIncluded) {
    Morphology bare;
    for (auto w : {"cat", "travelling", "ode", "journey's end", "x"}) EXPECT_TRUE(bare.base_forms(w).count(text::normalize(w)));
}

TEST(Morphology, ExceptionsTakePrecedence) {
    const auto& m = resources()->morph;
    EXPECT_TRUE(m.base_forms("children").count("child"));
    EXPECT_TRUE(m.base_forms("travelling").count("travel"));
    auto better = m.ordered_base_forms("better");
    ASSERT_GE(better.size(), 3u);
    EXPECT_EQ(better[0], "better");
    // exception bases come before the rule output "bett"
    auto pos_good = std::find(better.begin(), better.end(), "good") - better.begin();
    auto pos_bett = std::find(better.begin(), better.end(), "bett") - better.begin();
    EXPECT_LT(pos_good, pos_bett);
    Morphology custom;
    custom.add_exception(Pos::N, "mice", "mouse");
    EXPECT_EQ(custom.ordered_base_forms("mice")[1], "mouse");
}

TEST(Variants, TireTyre) {
    const auto& v = resources()->variants;
    auto a = v.variants("tire");
    EXPECT_NE(std::find(a.begin(), a.end(), "tyre"), a.end());
    auto b = v.variants("tyre");
    EXPECT_NE(std::find(b.begin(), b.end(), "tire"), b.end());
}

TEST(StopList, MembershipAndSize) {
    const auto& s = resources()->stop;
    EXPECT_TRUE(s.contains("the"));
    EXPECT_TRUE(s.contains("The"));
    EXPECT_FALSE(s.contains("train"));
    EXPECT_FALSE(s.contains(""));
    std::ifstream in(data("stoplist.txt"));
    std::size_t lines = 0;
    for (std::string l; std::getline(in, l);) lines += !text::trim(l).empty();
    EXPECT_EQ(s.size(), lines);
}

TEST(Index, DailyHasEightReferences) {
    auto hits = engine("mini.kbt").index.lookup("daily");
    std::vector<int> heads;
    for (auto& h : hits) heads.push_back(h.sense.head);
    EXPECT_EQ(heads, (std::vector<int>{139, 141, 141, 528, 528, 620, 648, 742}));
}

TEST(Index, PhraseSplitReachesFishFood) {
    SenseKey animal(365, "animal", Pos::N);
    auto with = senses(engine("mini.kbt").index.lookup("food"));
    EXPECT_NE(std::find(with.begin(), with.end(), animal), with.end());
    auto without = senses(engine("mini.kbt", false).index.lookup("food"));
    EXPECT_EQ(std::find(without.begin(), without.end(), animal), without.end());
}

TEST(Index, VariantLookup) {
    auto& idx = engine("mini.kbt").index;
    auto tire = idx.lookup("tire");
    ASSERT_EQ(tire.size(), 1u);
    EXPECT_EQ(tire[0].sense, SenseKey(250, "wheel", Pos::N));
    EXPECT_EQ(senses(tire), senses(idx.lookup("tyre")));
    EXPECT_TRUE(idx.lookup("qwzzk").empty());
}

TEST(Index, ToAndBePhrases) {
    auto eng = engine_from_text("#class 1 | c\n#section 1 | s\n#head 1 | h\n#pos VB.\n#para to offer\nto offer; be generous\n");
    EXPECT_EQ(eng.index.lookup("offer").size(), 1u);
    EXPECT_EQ(eng.index.lookup("generous").size(), 1u);
    EXPECT_FALSE(eng.index.lookup("offer")[0].literal);
}

TEST(Index, SingleWordKb) {
    auto eng = engine_from_text("#class 1 | c\n#section 1 | s\n#head 1 | h\n#pos N.\n#para a\na\n");
    EXPECT_EQ(eng.index.size(), 1u);
    EXPECT_EQ(eng.index.reference_count(), 1u);
}

TEST(Index, OrderedByHeadPosKeyword) {
    auto hits = engine("mini.kbt").index.lookup("feline");
    EXPECT_EQ(senses(hits), (std::vector<SenseKey>{SenseKey(365, "cat", Pos::N), SenseKey(365, "animal", Pos::ADJ),
                                                   SenseKey(698, "cunning", Pos::ADJ)}));
}

TEST(Index, CompletenessOnFixtures) {
    for (auto name : {"mini.kbt", "einstein.kbt", "decrement.kbt", "existence.kbt"}) {
        auto& eng = engine(name);
        eng.kb->for_each_paragraph([&](const Head&, const Paragraph& p) {
            for (auto& g : p.groups)
                for (auto& w : g.words) {
                    auto s = senses(eng.index.lookup(w));
                    EXPECT_NE(std::find(s.begin(), s.end(), p.sense), s.end()) << name << ": " << w;
                }
        });
    }
}

TEST(Index, DeterministicBuild) {
    auto a = engine_from_text(slurp(fixture("mini.kbt")));
    auto b = engine_from_text(slurp(fixture("mini.kbt")));
    std::map<std::string, std::vector<Posting>> ea, eb;
    a.index.for_each_entry([&](const std::string& k, const std::vector<Posting>& v) { ea[k] = v; });
    b.index.for_each_entry([&](const std::string& k, const std::vector<Posting>& v) { eb[k] = v; });
    EXPECT_EQ(ea, eb);
}

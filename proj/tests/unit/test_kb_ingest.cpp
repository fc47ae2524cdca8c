#include <gtest/gtest.h>

#include <chrono>

#include "support.hpp"

using namespace lexkb;
using namespace testing_support;

namespace {

const char* kTiny = R"(#class 1 | Abstract relations
#section 1 | Existence
#subsection Abstract existence
#headgroup 1,2
#head 1 | Existence
#pos N.
#para existence
existence; being
entity
@cref 2 | nonexistence
#head 2 | Nonexistence
#pos N.
#para nonexistence
nonexistence; nothingness
)";

} // namespace

TEST(Text, NormalizeFoldsAndCollapses) {
    EXPECT_EQ(text::normalize("  Journey's   End "), "journey's end");
    EXPECT_EQ(text::number_word(6), "six");
    EXPECT_EQ(text::number_word(21), "twenty-one");
    EXPECT_TRUE(text::valid_utf8("na\xc3\xafve"));
    EXPECT_FALSE(text::valid_utf8("bad \xff byte"));
}

TEST(Pos, LabelsRoundTrip) {
    for (auto p : kAllPos) EXPECT_EQ(parse_pos(pos_label(p)), p);
    EXPECT_EQ(parse_pos("adj"), Pos::ADJ);
    EXPECT_FALSE(parse_pos("XYZ."));
}

TEST(KnowledgeBase, ResolvesWonderNoun) {
    auto& kb = *engine("mini.kbt").kb;
    const auto& p = kb.resolve(SenseKey(864, "wonder", Pos::N));
    std::vector<std::string> first{"wonder", "state of wonder", "wonderment", "raptness"};
    EXPECT_EQ(p.groups.front().words, first);
    EXPECT_THROW(kb.resolve(SenseKey(864, "wonder", Pos::INT)), NotFound);
    EXPECT_EQ(kb.resolve(SenseKey(864, "amazing!", Pos::INT)).groups.size(), 1u);
}

TEST(KnowledgeBase, ParagraphsAreInPosOrder) {
    auto& kb = *engine("mini.kbt").kb;
    for (auto& [n, h] : kb.heads())
        for (std::size_t i = 1; i < h.paragraphs.size(); ++i)
            EXPECT_LE(h.paragraphs[i - 1].sense.pos, h.paragraphs[i].sense.pos) << n;
}

TEST(KnowledgeBase, LocatesGroups) {
    auto& kb = *engine("mini.kbt").kb;
    SenseKey goal(295, "arrival", Pos::N);
    EXPECT_EQ(kb.locate(goal, "terminus"), 1u);
    EXPECT_EQ(kb.locate(goal, "journey's end"), 1u);
    EXPECT_THROW(kb.locate(goal, "lynx"), NotFound);
}

TEST(KnowledgeBase, RejectsStructuralErrors) {
    Head h;
    h.address = {1, "c", 1, "s", "", {1}, 1, "h"};
    EXPECT_THROW(KnowledgeBase(std::vector<Head>{}), Error);
    auto bad_class = h;
    bad_class.address.class_num = 9;
    EXPECT_THROW(KnowledgeBase({bad_class}), Error);
    auto bad_group = h;
    bad_group.address.headgroup = {2, 3};
    EXPECT_THROW(KnowledgeBase({bad_group}), Error);
    auto empty_para = h;
    empty_para.paragraphs.push_back(Paragraph{SenseKey(1, "x", Pos::N), "x", {}});
    EXPECT_THROW(KnowledgeBase({empty_para}), Error);
}

TEST(Ingest, ExistenceSample) {
    auto r = parse_corpus_file(fixture("existence.kbt"));
    auto s = r.kb.stats();
    EXPECT_EQ(s.heads, 1u);
    EXPECT_EQ(s.paragraphs, 1u);
    EXPECT_EQ(s.groups, 15u);
    EXPECT_EQ(s.relations, 10u);
    // every cross-reference points outside the sample
    EXPECT_EQ(r.kb.warnings().size(), 10u);
}

TEST(Ingest, ErrorsCarryLineNumbers) {
    std::string bad = kTiny;
    bad += "#pos Q.\n";
    try {
        parse_corpus_string(bad);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 15u);
    }
    EXPECT_THROW(parse_corpus_string("#head 1 | x\n"), ParseError);
    EXPECT_THROW(parse_corpus_string(""), ParseError);
    EXPECT_THROW(parse_corpus_string(std::string(kTiny) + "#bogus 3\n"), ParseError);
    EXPECT_THROW(parse_corpus_string("#class 1 | a\n#section 1 | b\n#head 5 | h\n#pos N.\n#para k\nother; k\n"),
                 ParseError);
}

TEST(Ingest, LenientSkipsNoiseStrictRejects) {
    std::string noisy = std::string(kTiny) + "bad character here\n#12$ debris\n";
    auto r = parse_corpus_string(noisy);
    EXPECT_EQ(r.skipped_groups, 2u);
    EXPECT_EQ(r.kb.resolve(SenseKey(2, "nonexistence", Pos::N)).groups.size(), 1u);
    IngestOptions strict;
    strict.strict = true;
    EXPECT_THROW(parse_corpus_string(noisy, strict), ParseError);
}

TEST(Ingest, ExpandsAbbreviations) {
    EXPECT_EQ(expand_abbreviations("drop a brick or clanger"), "drop a brick, drop a clanger");
    EXPECT_EQ(expand_abbreviations("weasel word; loan w."), "weasel word; loan word");
    EXPECT_EQ(expand_abbreviations("countryman or -woman"), "countryman, countrywoman");
    EXPECT_EQ(expand_abbreviations("one way or another"), "one way or another");
    std::vector<std::string> warn;
    expand_abbreviations("x.", &warn);
    EXPECT_EQ(warn.size(), 1u);
}

TEST(Ingest, RoundTripIsAFixedPoint) {
    for (auto name : {"mini.kbt", "existence.kbt", "einstein.kbt", "decrement.kbt", "feline.kbt", "chains_mini.kbt"}) {
        auto first = serialize(parse_corpus_file(fixture(name)).kb);
        auto again = parse_corpus_string(first);
        EXPECT_EQ(serialize(again.kb), first) << name;
        EXPECT_EQ(again.kb.heads(), parse_corpus_file(fixture(name)).kb.heads()) << name;
    }
}

TEST(Ingest, TagsAndSeeReferencesSurvive) {
    std::string s = std::string(kTiny) + "nil; naught\n@see 1 | existence\n@tag naught | e\n";
    auto r = parse_corpus_string(s);
    auto& g = r.kb.resolve(SenseKey(2, "nonexistence", Pos::N)).groups.back();
    ASSERT_EQ(g.relations.size(), 1u);
    EXPECT_EQ(g.relations[0].kind, RelationKind::see);
    ASSERT_EQ(g.tags.size(), 1u);
    EXPECT_EQ(g.tags[0].second, StyleTag::e);
    EXPECT_EQ(serialize(parse_corpus_string(serialize(r.kb)).kb), serialize(r.kb));
}

#include <doctest.h>

#include <random>
#include <sstream>

#include "kgqa/errors.hpp"
#include "kgqa/templates.hpp"

using namespace kgqa;

namespace {

TemplateRegistry registry_from(const std::string& text) {
    std::istringstream in(text);
    return load_templates(in);
}

const std::string kCoreTemplates =
    "I|Who did (*p) marry?|isMarriedTo\n"
    "II|When was (*p) died?|diedOnDate\n"
    "III|What is the relationship between (*p) and (*p1)|\n";

}  // namespace

TEST_CASE("load_templates parses a basic template file") {
    auto registry = registry_from(kCoreTemplates);
    REQUIRE(registry.size() == 3);
    CHECK(registry.templates()[0].pattern_class == PatternClass::I);
    CHECK(registry.templates()[0].target == "isMarriedTo");
    CHECK(registry.templates()[1].pattern_class == PatternClass::II);
    CHECK(registry.templates()[1].target == "diedOnDate");
    CHECK(registry.templates()[2].pattern_class == PatternClass::III);
    CHECK(registry.templates()[2].target.empty());
}

TEST_CASE("load_templates rejects malformed input with line numbers") {
    CHECK_THROWS_AS(registry_from("I|no slot here|isMarriedTo\n"), TemplateError);
    CHECK_THROWS_AS(registry_from("IV|Who did (*p) marry?|isMarriedTo\n"), TemplateError);
    CHECK_THROWS_AS(registry_from("I|Who did (*p) marry?|\n"), TemplateError);
    CHECK_THROWS_AS(registry_from("III|Between (*p) and (*p1)?|extra\n"), TemplateError);
    CHECK_THROWS_AS(registry_from("I|missing field\n"), TemplateError);
    try {
        registry_from("I|Who did (*p) marry?|isMarriedTo\nbad\n");
        FAIL("expected TemplateError");
    } catch (const TemplateError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("duplicate surfaces are rejected") {
    CHECK_THROWS_AS(
        registry_from("I|Who did (*p) marry?|isMarriedTo\nI|Who did (*p) marry?|hasChild\n"),
        TemplateError);
}

TEST_CASE("classify extracts class I subject and relation") {
    auto registry = registry_from(kCoreTemplates);
    auto parsed = registry.classify("Who did Malekeh Jahan marry?");
    CHECK(parsed.pattern_class == PatternClass::I);
    CHECK(parsed.v1 == "Malekeh_Jahan");
    CHECK(parsed.rel == "isMarriedTo");
    CHECK_FALSE(parsed.v2);
    CHECK_FALSE(parsed.prop);
}

TEST_CASE("classify extracts class II subject and property") {
    auto registry = registry_from(kCoreTemplates);
    auto parsed = registry.classify("When was Kurt Brändle died?");
    CHECK(parsed.pattern_class == PatternClass::II);
    CHECK(parsed.v1 == "Kurt_Brändle");
    CHECK(parsed.prop == "diedOnDate");
}

TEST_CASE("classify extracts both class III subjects") {
    auto registry = registry_from(kCoreTemplates);
    auto parsed = registry.classify("What is the relationship between Malekeh Jahan and Kurt Brändle");
    CHECK(parsed.pattern_class == PatternClass::III);
    CHECK(parsed.v1 == "Malekeh_Jahan");
    CHECK(parsed.v2 == "Kurt_Brändle");
}

TEST_CASE("classify throws NoTemplateMatch for unmatched surfaces") {
    auto registry = registry_from(kCoreTemplates);
    CHECK_THROWS_AS(registry.classify("How tall is X?"), NoTemplateMatch);
}

TEST_CASE("fixed template text matches case-insensitively, captures keep case") {
    auto registry = registry_from(kCoreTemplates);
    auto parsed = registry.classify("WHO DID Malekeh Jahan MARRY");
    CHECK(parsed.v1 == "Malekeh_Jahan");
}

TEST_CASE("trailing question mark is optional on both sides") {
    auto registry = registry_from(kCoreTemplates);
    CHECK(registry.classify("Who did X marry").v1 == "X");
    CHECK(registry.classify("What is the relationship between A and B?").v2 == "B");
}

TEST_CASE("whitespace-only slots do not match") {
    auto registry = registry_from(kCoreTemplates);
    CHECK_THROWS_AS(registry.classify("Who did   marry?"), NoTemplateMatch);
}

TEST_CASE("template order determines precedence") {
    auto specific_first = registry_from(
        "I|Who did Queen (*p) marry?|isMarriedToQueen\n"
        "I|Who did (*p) marry?|isMarriedTo\n");
    CHECK(specific_first.classify("Who did Queen Victoria marry?").rel == "isMarriedToQueen");
    CHECK(specific_first.classify("Who did Queen Victoria marry?").v1 == "Victoria");

    auto general_first = registry_from(
        "I|Who did (*p) marry?|isMarriedTo\n"
        "I|Who did Queen (*p) marry?|isMarriedToQueen\n");
    CHECK(general_first.classify("Who did Queen Victoria marry?").rel == "isMarriedTo");
    CHECK(general_first.classify("Who did Queen Victoria marry?").v1 == "Queen_Victoria");
}

TEST_CASE("instantiate then classify round-trips every template") {
    auto registry = registry_from(kCoreTemplates);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::uniform_int_distribution<int> word_count(1, 3);
    auto random_filler = [&] {
        std::string filler;
        int words = word_count(rng);
        for (int w = 0; w < words; ++w) {
            if (w) filler += ' ';
            for (int i = 0; i < 5; ++i) filler += static_cast<char>(letter(rng));
        }
        return filler;
    };
    auto underscored = [](std::string s) {
        std::replace(s.begin(), s.end(), ' ', '_');
        return s;
    };

    for (const auto& tmpl : registry.templates()) {
        for (int trial = 0; trial < 20; ++trial) {
            std::string f1 = random_filler();
            std::string f2 = random_filler();
            auto parsed = registry.classify(tmpl.instantiate(f1, f2));
            CHECK(parsed.pattern_class == tmpl.pattern_class);
            CHECK(parsed.v1 == underscored(f1));
            switch (tmpl.pattern_class) {
                case PatternClass::I: CHECK(parsed.rel == tmpl.target); break;
                case PatternClass::II: CHECK(parsed.prop == tmpl.target); break;
                case PatternClass::III: CHECK(parsed.v2 == underscored(f2)); break;
            }
        }
    }
}

TEST_CASE("classify is a pure function of registry and question") {
    auto registry = registry_from(kCoreTemplates);
    auto a = registry.classify("Who did X marry?");
    auto b = registry.classify("Who did X marry?");
    CHECK(a.v1 == b.v1);
    CHECK(a.rel == b.rel);
    CHECK(a.pattern_class == b.pattern_class);
}

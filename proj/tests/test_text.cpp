#include "linksift/text.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

#include <random>
#include <sstream>

using namespace linksift;

TEST_CASE("tokenizer splits on non-alphanumerics and keeps intra-word hyphens") {
    auto toks = text::tokenize("anti-discriminatory rules, 42 cases; x_y");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0] == "anti-discriminatory");
    CHECK(toks[1] == "rules");
    CHECK(toks[2] == "42");
    CHECK(toks[3] == "cases");
    CHECK(toks[4] == "x");
    CHECK(toks[5] == "y");
    CHECK(text::tokenize("--a- -b--").size() == 2);
}

TEST_CASE("porter stemmer reference forms") {
    // cross-checked against an independent rule-by-rule implementation
    CHECK(text::porter_stem("caresses") == "caress");
    CHECK(text::porter_stem("ponies") == "poni");
    CHECK(text::porter_stem("ties") == "ti");
    CHECK(text::porter_stem("cats") == "cat");
    CHECK(text::porter_stem("feed") == "feed");
    CHECK(text::porter_stem("agreed") == "agre");
    CHECK(text::porter_stem("plastered") == "plaster");
    CHECK(text::porter_stem("motoring") == "motor");
    CHECK(text::porter_stem("sing") == "sing");
    CHECK(text::porter_stem("conflated") == "conflat");
    CHECK(text::porter_stem("hopping") == "hop");
    CHECK(text::porter_stem("falling") == "fall");
    CHECK(text::porter_stem("filing") == "file");
    CHECK(text::porter_stem("happy") == "happi");
    CHECK(text::porter_stem("sky") == "sky");
    CHECK(text::porter_stem("relational") == "relat");
    CHECK(text::porter_stem("conditional") == "condit");
    CHECK(text::porter_stem("rational") == "ration");
    CHECK(text::porter_stem("generalization") == "gener");
    CHECK(text::porter_stem("sensibility") == "sensibl");
    CHECK(text::porter_stem("triplicate") == "triplic");
    CHECK(text::porter_stem("dependent") == "depend");
    CHECK(text::porter_stem("probate") == "probat");
    CHECK(text::porter_stem("controll") == "control");
    CHECK(text::porter_stem("effective") == "effect");
    CHECK(text::porter_stem("watching") == "watch");
    CHECK(text::porter_stem("species") == "speci");
}

TEST_CASE("normalize_text: stopwords and case folding") {
    auto cfg = text::NormalizationConfig::defaults();
    auto toks = text::normalize_text("the cat AND the dog", cfg);
    REQUIRE(toks.size() == 2);
    CHECK(toks[0] == "cat");
    CHECK(toks[1] == "dog");
}

TEST_CASE("normalize_text: inflections share a stem") {
    auto cfg = text::NormalizationConfig::defaults();
    auto toks = text::normalize_text("organizes organized organizing", cfg);
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == toks[1]);
    CHECK(toks[1] == toks[2]);
    CHECK(toks[0] == "organ");
}

TEST_CASE("normalize_text: compound unification") {
    auto cfg = text::NormalizationConfig::defaults();
    auto spaced = text::normalize_text("anti discriminatory", cfg);
    auto closed = text::normalize_text("nondiscriminatory", cfg);
    auto hyphen = text::normalize_text("Anti-Discriminatory", cfg);
    REQUIRE(spaced.size() == 1);
    REQUIRE(closed.size() == 1);
    REQUIRE(hyphen.size() == 1);
    CHECK(spaced[0] == "anti-discriminatori");
    CHECK(closed[0] == spaced[0]);
    CHECK(hyphen[0] == spaced[0]);
}

TEST_CASE("normalize_text: empty input") {
    auto cfg = text::NormalizationConfig::defaults();
    CHECK(text::normalize_text("", cfg).empty());
    CHECK(text::normalize_text("   \t\n ", cfg).empty());
}

TEST_CASE("no output token is a stopword or contains upper case") {
    auto cfg = text::NormalizationConfig::defaults();
    std::mt19937 rng(4);
    const char* words[] = {"The", "RUNNING", "dogs", "And", "His", "quickly",
                           "JUMPED", "over", "週", "fences", "it", "ITSELF"};
    for (int round = 0; round < 50; ++round) {
        std::string s;
        for (int i = 0; i < 12; ++i) s += std::string(words[rng() % 12]) + " ";
        for (const auto& tok : text::normalize_text(s, cfg)) {
            CHECK(cfg.stopword_list.count(tok) == 0);
            for (char c : tok) CHECK(!(c >= 'A' && c <= 'Z'));
        }
    }
}

TEST_CASE("normalization is idempotent on its own output") {
    auto cfg = text::NormalizationConfig::defaults();
    const char* samples[] = {
        "The latest versions of the new software organizes everything",
        "anti discriminatory policies were nondiscriminatory yesterday",
        "Fish swimming happily; birds flying plastered skies 42 times",
        "generalization of conditional relational reasoning abilities",
    };
    for (const char* s : samples) {
        auto once = text::normalize_text(s, cfg);
        std::string rendered;
        for (const auto& t : once) rendered += t + " ";
        auto twice = text::normalize_text(rendered, cfg);
        CHECK(once == twice);
    }
}

TEST_CASE("bundled stopword file matches the built-in list") {
    auto from_file = text::load_stopwords(testsupport::data_path("stopwords.txt"));
    CHECK(from_file.size() == 127);
    CHECK(from_file == text::default_stopwords());
}

TEST_CASE("compound table file loads") {
    auto rules = text::load_compounds(testsupport::data_path("compounds.tsv"));
    REQUIRE(rules.size() == 1);
    CHECK(rules[0].spaced == "anti discriminatory");
    CHECK(rules[0].closed == "nondiscriminatory");
    CHECK(rules[0].hyphenated == "anti-discriminatory");
}

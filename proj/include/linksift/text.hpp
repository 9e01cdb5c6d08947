#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace linksift::text {

struct CompoundRule {
    std::string spaced;      // "anti discriminatory" (lower-case)
    std::string closed;      // "nondiscriminatory"
    std::string hyphenated;  // "anti-discriminatory"
};

struct NormalizationConfig {
    std::set<std::string> stopword_list;  // entries already lower-case
    bool enable_stemming = true;
    bool enable_casefold = true;
    std::vector<CompoundRule> compound_rules;

    static NormalizationConfig defaults();
};

// Maximal runs of ASCII letters/digits; a hyphen joining two runs is kept,
// so "anti-discriminatory" is one token. Everything else separates.
std::vector<std::string> tokenize(std::string_view s);

// Classic Porter (1980) stemmer. Input must be lower-case.
std::string porter_stem(std::string_view word);

// tokenize -> case fold -> compound unification -> stopword removal ->
// stemming, order preserved.
std::vector<std::string> normalize_text(std::string_view s, const NormalizationConfig& cfg);

// The bundled 127-word stopword list (lower-case).
const std::set<std::string>& default_stopwords();

// Built-in compound table seeded with the spaced/closed -> hyphenated rule
// for "anti-discriminatory".
const std::vector<CompoundRule>& default_compounds();

// Data-file loaders; formats match data/stopwords.txt and data/compounds.tsv.
std::set<std::string> load_stopwords(const std::string& path);
std::vector<CompoundRule> load_compounds(const std::string& path);

}  // namespace linksift::text

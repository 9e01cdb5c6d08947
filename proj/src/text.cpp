#include "linksift/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linksift::text {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// --- Porter stemmer ------------------------------------------------------
//
// Straight implementation of the 1980 algorithm: measure m over the [C](VC)^m[V]
// form, conditions *v*, *d, *o, and steps 1a..5b applied in order.

class Porter {
  public:
    static std::string stem(std::string_view in) {
        if (in.size() <= 2) return std::string(in);
        Porter p(in);
        p.step1a();
        p.step1b();
        p.step1c();
        p.step2();
        p.step3();
        p.step4();
        p.step5a();
        p.step5b();
        return p.w_;
    }

  private:
    explicit Porter(std::string_view in) : w_(in) {}

    std::string w_;

    static bool is_vowel_letter(char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
    }

    // consonant per Porter: y is a consonant at position 0 or after a vowel
    bool cons(size_t i) const {
        char c = w_[i];
        if (is_vowel_letter(c)) return false;
        if (c == 'y') return i == 0 ? true : !cons(i - 1);
        return true;
    }

    // measure of w_[0..end)
    int measure(size_t end) const {
        int m = 0;
        size_t i = 0;
        while (i < end && cons(i)) ++i;  // skip initial consonants
        while (i < end) {
            while (i < end && !cons(i)) ++i;  // vowel run
            if (i >= end) break;
            ++m;
            while (i < end && cons(i)) ++i;  // consonant run
        }
        return m;
    }

    bool has_vowel(size_t end) const {
        for (size_t i = 0; i < end; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons() const {
        size_t n = w_.size();
        return n >= 2 && w_[n - 1] == w_[n - 2] && cons(n - 1);
    }

    // *o: stem ends cvc where the final c is not w, x or y
    bool cvc(size_t end) const {
        if (end < 3) return false;
        if (!cons(end - 3) || cons(end - 2) || !cons(end - 1)) return false;
        char c = w_[end - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view suffix) const {
        return w_.size() >= suffix.size() &&
               w_.compare(w_.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    size_t stem_len(std::string_view suffix) const { return w_.size() - suffix.size(); }

    // replace suffix when measure of the remaining stem exceeds threshold
    bool replace_if_m(std::string_view suffix, std::string_view repl, int m_gt) {
        if (!ends(suffix)) return false;
        size_t len = stem_len(suffix);
        if (measure(len) > m_gt) {
            w_.resize(len);
            w_.append(repl);
            return true;
        }
        return false;
    }

    void step1a() {
        if (ends("sses")) {
            w_.resize(w_.size() - 2);
        } else if (ends("ies")) {
            w_.resize(w_.size() - 2);
        } else if (ends("ss")) {
            // keep
        } else if (ends("s")) {
            w_.pop_back();
        }
    }

    void step1b() {
        if (ends("eed")) {
            if (measure(stem_len("eed")) > 0) w_.pop_back();
            return;
        }
        bool removed = false;
        if (ends("ed") && has_vowel(stem_len("ed"))) {
            w_.resize(stem_len("ed"));
            removed = true;
        } else if (ends("ing") && has_vowel(stem_len("ing"))) {
            w_.resize(stem_len("ing"));
            removed = true;
        }
        if (!removed) return;
        if (ends("at") || ends("bl") || ends("iz")) {
            w_ += 'e';
        } else if (double_cons() && !ends("l") && !ends("s") && !ends("z")) {
            w_.pop_back();
        } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
            w_ += 'e';
        }
    }

    void step1c() {
        if (ends("y") && has_vowel(stem_len("y"))) w_.back() = 'i';
    }

    void step2() {
        static constexpr std::pair<std::string_view, std::string_view> rules[] = {
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"}};
        for (auto [suf, rep] : rules)
            if (ends(suf)) {
                replace_if_m(suf, rep, 0);
                return;
            }
    }

    void step3() {
        static constexpr std::pair<std::string_view, std::string_view> rules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
        for (auto [suf, rep] : rules)
            if (ends(suf)) {
                replace_if_m(suf, rep, 0);
                return;
            }
    }

    void step4() {
        static constexpr std::string_view suffixes[] = {
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
            "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive", "ize"};
        for (auto suf : suffixes) {
            if (!ends(suf)) continue;
            size_t len = stem_len(suf);
            if (suf == "ion" && !(len > 0 && (w_[len - 1] == 's' || w_[len - 1] == 't')))
                return;
            if (measure(len) > 1) w_.resize(len);
            return;
        }
    }

    void step5a() {
        if (!ends("e")) return;
        size_t len = w_.size() - 1;
        int m = measure(len);
        if (m > 1 || (m == 1 && !cvc(len))) w_.pop_back();
    }

    void step5b() {
        if (ends("ll") && measure(w_.size()) > 1) w_.pop_back();
    }
};

void stem_token_inplace(std::string& tok) {
    // hyphenated compounds stem per segment
    std::string out;
    size_t start = 0;
    while (start <= tok.size()) {
        auto dash = tok.find('-', start);
        auto seg = tok.substr(start, dash == std::string::npos ? std::string::npos
                                                               : dash - start);
        if (!out.empty()) out += '-';
        out += Porter::stem(seg);
        if (dash == std::string::npos) break;
        start = dash + 1;
    }
    tok = std::move(out);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        if (!is_word_char(s[i])) {
            ++i;
            continue;
        }
        std::string tok;
        while (i < n && is_word_char(s[i])) tok += s[i++];
        // hyphen joins the next alphanumeric run into the same token
        while (i < n && s[i] == '-' && i + 1 < n && is_word_char(s[i + 1])) {
            tok += '-';
            ++i;
            while (i < n && is_word_char(s[i])) tok += s[i++];
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::string porter_stem(std::string_view word) { return Porter::stem(word); }

std::vector<std::string> normalize_text(std::string_view s, const NormalizationConfig& cfg) {
    std::vector<std::string> tokens = tokenize(s);
    if (cfg.enable_casefold)
        for (auto& t : tokens) t = lower(t);

    // compound unification before stemming: closed and spaced forms collapse
    // onto the hyphenated form
    if (!cfg.compound_rules.empty()) {
        std::vector<std::string> unified;
        unified.reserve(tokens.size());
        for (size_t i = 0; i < tokens.size();) {
            bool matched = false;
            for (const auto& rule : cfg.compound_rules) {
                if (tokens[i] == rule.closed || tokens[i] == rule.hyphenated) {
                    unified.push_back(rule.hyphenated);
                    ++i;
                    matched = true;
                    break;
                }
                // spaced form: consecutive tokens joined by single spaces
                std::vector<std::string> parts = tokenize(rule.spaced);
                if (parts.size() >= 2 && i + parts.size() <= tokens.size()) {
                    bool all = true;
                    for (size_t k = 0; k < parts.size(); ++k)
                        if (tokens[i + k] != parts[k]) {
                            all = false;
                            break;
                        }
                    if (all) {
                        unified.push_back(rule.hyphenated);
                        i += parts.size();
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) unified.push_back(std::move(tokens[i++]));
        }
        tokens = std::move(unified);
    }

    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& t : tokens) {
        if (cfg.stopword_list.count(t)) continue;
        if (cfg.enable_stemming) stem_token_inplace(t);
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// 127 common English words; mirrors data/stopwords.txt
constexpr std::string_view kStopwords[] = {
    "a",         "about",     "above",     "after",      "again",    "against",  "all",
    "am",        "an",        "and",       "any",        "are",      "as",       "at",
    "be",        "because",   "been",      "before",     "being",    "below",    "between",
    "both",      "but",       "by",        "can",        "cannot",   "could",    "did",
    "do",        "does",      "doing",     "down",       "during",   "each",     "few",
    "for",       "from",      "further",   "had",        "has",      "have",
    "having",    "he",        "her",       "here",       "hers",     "herself",  "him",
    "himself",   "his",       "how",       "i",          "if",       "in",       "into",
    "is",        "it",        "its",       "itself",     "just",     "me",       "more",
    "most",      "my",        "myself",    "no",         "nor",      "not",      "now",
    "of",        "off",       "on",        "once",       "only",     "or",       "other",
    "our",       "ours",      "ourselves", "out",        "over",     "own",      "same",
    "she",       "should",    "so",        "some",       "such",     "than",     "that",
    "the",       "their",     "theirs",    "them",       "themselves", "then",   "there",
    "these",     "they",      "this",      "those",      "through",  "to",       "too",
    "under",     "until",     "up",        "very",       "was",      "we",       "were",
    "what",      "when",      "where",     "which",      "while",    "who",      "whom",
    "why",       "will",      "with",      "would",      "you",      "your",     "yours",
    "yourself",  "yourselves"};

}  // namespace

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = [] {
        std::set<std::string> s;
        for (auto w : kStopwords) s.emplace(w);
        return s;
    }();
    return words;
}

const std::vector<CompoundRule>& default_compounds() {
    static const std::vector<CompoundRule> rules = {
        {"anti discriminatory", "nondiscriminatory", "anti-discriminatory"},
    };
    return rules;
}

NormalizationConfig NormalizationConfig::defaults() {
    NormalizationConfig cfg;
    cfg.stopword_list = default_stopwords();
    cfg.compound_rules = default_compounds();
    return cfg;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword list: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(lower(line));
    }
    return words;
}

std::vector<CompoundRule> load_compounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open compound table: " + path);
    std::vector<CompoundRule> rules;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        CompoundRule rule;
        if (!std::getline(ss, rule.spaced, '\t') || !std::getline(ss, rule.closed, '\t') ||
            !std::getline(ss, rule.hyphenated, '\t'))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected three tab-separated fields");
        rule.spaced = lower(rule.spaced);
        rule.closed = lower(rule.closed);
        rule.hyphenated = lower(rule.hyphenated);
        rules.push_back(std::move(rule));
    }
    return rules;
}

}  // namespace linksift::text

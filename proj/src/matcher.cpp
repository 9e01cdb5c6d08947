#include "linksift/matcher.hpp"

#include "linksift/html.hpp"
#include "linksift/text.hpp"
#include "linksift/url.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace linksift::matcher {

namespace {

constexpr size_t kCandidatePool = 50;

std::string fold(std::string_view s) {
    return url::ascii_lower(html::collapse_ws(s));
}

std::vector<uint32_t> codepoints(std::string_view s) {
    std::vector<uint32_t> cps;
    size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        uint32_t cp = c;
        size_t len = 1;
        if (c >= 0xF0) len = 4;
        else if (c >= 0xE0) len = 3;
        else if (c >= 0xC0) len = 2;
        if (len > 1 && i + len <= s.size()) {
            cp = c & (0xFF >> (len + 1));
            bool ok = true;
            for (size_t k = 1; k < len; ++k) {
                auto cc = static_cast<unsigned char>(s[i + k]);
                if ((cc & 0xC0) != 0x80) { ok = false; break; }
                cp = (cp << 6) | (cc & 0x3F);
            }
            if (!ok) { cp = c; len = 1; }
        } else {
            len = 1;
        }
        cps.push_back(cp);
        i += len;
    }
    return cps;
}

size_t levenshtein(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<size_t> prev(m + 1), cur(m + 1);
    for (size_t j = 0; j <= m; ++j) prev[j] = j;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= m; ++j) {
            size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::string local_name(const std::string& iri) {
    auto pos = iri.find_last_of("/#:");
    return pos == std::string::npos ? iri : iri.substr(pos + 1);
}

struct LabeledClass {
    std::string iri;
    std::string folded;  // effective label, case-folded and collapsed
    std::set<std::string> tokens;
};

std::vector<LabeledClass> build_label_index(const ontology::Ontology& o) {
    std::vector<LabeledClass> out;
    out.reserve(o.classes.size());
    for (const auto& iri : o.classes) {
        LabeledClass lc;
        lc.iri = iri;
        lc.folded = fold(class_label(o, iri));
        for (auto& t : text::tokenize(lc.folded)) lc.tokens.insert(std::move(t));
        out.push_back(std::move(lc));
    }
    return out;
}

Match match_with_index(const std::string& topic, const ontology::OntologyClosure& closure,
                       const std::vector<LabeledClass>& classes, const MatchConfig& config) {
    std::string folded_topic = fold(topic);
    if (folded_topic.empty()) return {};

    std::set<std::string> topic_tokens;
    for (auto& t : text::tokenize(folded_topic)) topic_tokens.insert(std::move(t));

    // lexical candidate generation: exact, prefix, or token overlap
    std::vector<const LabeledClass*> anchors;  // exact label matches
    std::vector<std::pair<double, const LabeledClass*>> pool;
    for (const auto& lc : classes) {
        bool exact = lc.folded == folded_topic;
        bool prefix = !exact && !lc.folded.empty() &&
                      (lc.folded.rfind(folded_topic, 0) == 0 ||
                       folded_topic.rfind(lc.folded, 0) == 0);
        bool overlap = false;
        if (!exact && !prefix)
            for (const auto& t : topic_tokens)
                if (lc.tokens.count(t)) {
                    overlap = true;
                    break;
                }
        if (exact) anchors.push_back(&lc);
        if (exact || prefix || overlap)
            pool.emplace_back(string_similarity(folded_topic, lc.folded), &lc);
    }
    if (pool.empty()) return {};

    // strongest candidates by lexical score; deterministic tie order by IRI
    std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second->iri < y.second->iri;
    });
    if (pool.size() > kCandidatePool) pool.resize(kCandidatePool);

    Match best;
    for (const auto& [string_score, lc] : pool) {
        double score;
        if (anchors.empty()) {
            score = string_score;  // no anchor: pure string matching
        } else {
            double sem = 0;
            for (const auto* anchor : anchors)
                sem = std::max(sem, semantic_similarity(closure, lc->iri, anchor->iri));
            score = config.string_weight * string_score + (1.0 - config.string_weight) * sem;
        }
        bool better = !best.class_iri || score > best.score ||
                      (score == best.score && lc->iri < *best.class_iri);
        if (better) {
            best.score = score;
            best.class_iri = lc->iri;
        }
    }
    if (best.score < config.accept_threshold) return {std::nullopt, best.score};
    return best;
}

}  // namespace

void MatchConfig::validate() const {
    if (!(string_weight >= 0.0 && string_weight <= 1.0))
        throw std::invalid_argument("string weight must lie in [0,1]");
    if (!(accept_threshold > 0.0 && accept_threshold <= 1.0))
        throw std::invalid_argument("accept threshold must lie in (0,1]");
}

std::string class_label(const ontology::Ontology& o, const std::string& iri) {
    auto it = o.labels.find(iri);
    return it != o.labels.end() ? it->second : local_name(iri);
}

double string_similarity(std::string_view a, std::string_view b) {
    auto ca = codepoints(fold(a));
    auto cb = codepoints(fold(b));
    size_t longest = std::max(ca.size(), cb.size());
    if (longest == 0) return 1.0;  // two empty strings
    size_t dist = levenshtein(ca, cb);
    return 1.0 - static_cast<double>(dist) / static_cast<double>(longest);
}

double semantic_similarity(const ontology::OntologyClosure& closure, const std::string& a,
                           const std::string& b) {
    closure.require_class(a);
    closure.require_class(b);
    if (closure.equivalent(a, b)) return 1.0;
    int da = closure.depth(a);
    int db = closure.depth(b);
    int dl = closure.deepest_common_ancestor_depth(a, b);
    return 2.0 * dl / (da + db);
}

Match match_topic(const std::string& topic, const ontology::OntologyClosure& closure,
                  const MatchConfig& config) {
    config.validate();
    auto classes = build_label_index(closure.source());
    return match_with_index(topic, closure, classes, config);
}

std::pair<std::vector<ConceptRecord>, MatchReport> match_dataset(
    const std::vector<topics::TopicRecord>& records, const ontology::OntologyClosure& closure,
    const MatchConfig& config) {
    config.validate();
    auto classes = build_label_index(closure.source());

    std::vector<ConceptRecord> out;
    MatchReport report;
    report.total = static_cast<long>(records.size());

    std::map<std::string, Match> memo;
    auto match_cached = [&](const std::string& topic) -> const Match& {
        auto it = memo.find(topic);
        if (it == memo.end())
            it = memo.emplace(topic, match_with_index(topic, closure, classes, config)).first;
        return it->second;
    };

    for (const auto& rec : records) {
        const Match& src = match_cached(rec.context_topic);
        const Match& tgt = match_cached(rec.target_topic);
        bool src_un = !src.class_iri.has_value();
        bool tgt_un = !tgt.class_iri.has_value();
        if (src_un && tgt_un) {
            ++report.excluded_both;
            continue;
        }
        if (src_un) {
            ++report.excluded_source;
            continue;
        }
        if (tgt_un) {
            ++report.excluded_target;
            continue;
        }
        out.push_back({*src.class_iri, *tgt.class_iri, rec.user_label, rec.source_domain,
                       rec.link_id});
        ++report.matched;
    }
    // canonical output ordering
    std::sort(out.begin(), out.end(), [](const ConceptRecord& a, const ConceptRecord& b) {
        return a.link_id < b.link_id;
    });
    return {std::move(out), report};
}

}  // namespace linksift::matcher

#pragma once

#include "linksift/ontology.hpp"
#include "linksift/topics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linksift::matcher {

struct MatchConfig {
    double accept_threshold = 0.7;
    double string_weight = 0.5;  // alpha: weight of the string score

    void validate() const;
};

struct ConceptRecord {
    std::string source_class;
    std::string target_class;
    std::string user_label;
    std::string source_domain;
    std::string link_id;
};

struct Match {
    std::optional<std::string> class_iri;  // nullopt = UNMATCHED
    double score = 0;
};

struct MatchReport {
    long total = 0;
    long matched = 0;
    long excluded_source = 0;
    long excluded_target = 0;
    long excluded_both = 0;

    double matched_pct() const { return total == 0 ? 0.0 : 100.0 * matched / total; }
};

// 1 - normalized Levenshtein distance over case-folded, whitespace-collapsed
// inputs (code-point based); two empty strings score 1.
double string_similarity(std::string_view a, std::string_view b);

// Wu-Palmer over the canonical subclass DAG under a synthetic root:
// 2*depth(lcs) / (depth(a) + depth(b)). Equivalent classes score 1.
double semantic_similarity(const ontology::OntologyClosure& closure, const std::string& a,
                           const std::string& b);

// Candidate generation is lexical (exact / prefix / token overlap over class
// labels, pool capped at 50 by string score); candidates then score
// alpha*string + (1-alpha)*max semantic similarity to an exact-label anchor,
// falling back to the pure string score when no anchor exists. Ties break
// toward the lexicographically smallest IRI.
Match match_topic(const std::string& topic, const ontology::OntologyClosure& closure,
                  const MatchConfig& config);

// Effective label of a class: declared rdfs:label, else the IRI local name.
std::string class_label(const ontology::Ontology& o, const std::string& iri);

std::pair<std::vector<ConceptRecord>, MatchReport> match_dataset(
    const std::vector<topics::TopicRecord>& records, const ontology::OntologyClosure& closure,
    const MatchConfig& config);

}  // namespace linksift::matcher

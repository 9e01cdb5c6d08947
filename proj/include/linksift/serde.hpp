#pragma once

#include "linksift/crawl.hpp"
#include "linksift/eval.hpp"
#include "linksift/features.hpp"
#include "linksift/jsonl.hpp"
#include "linksift/linkprep.hpp"
#include "linksift/matcher.hpp"
#include "linksift/reasoner.hpp"
#include "linksift/topics.hpp"

namespace linksift::serde {

using jsonl::Json;

// links_raw.jsonl / links_clean.jsonl
Json to_json(const crawl::RawHyperlink& link);
crawl::RawHyperlink raw_link_from_json(const Json& doc);

// filter_report.json
Json to_json(const linkprep::FilterReport& report);

// features.jsonl
Json to_json(const features::FeatureRecord& record);
features::FeatureRecord feature_record_from_json(const Json& doc);

// assignment rows: {link_id, topic, confidence}
Json assignment_to_json(const std::string& link_id, const topics::TopicAssignment& a);
std::pair<std::string, topics::TopicAssignment> assignment_from_json(const Json& doc);

// topics.jsonl
Json to_json(const topics::TopicRecord& record);
topics::TopicRecord topic_record_from_json(const Json& doc);

Json to_json(const topics::IntegrateReport& report);

// concepts.jsonl
Json to_json(const matcher::ConceptRecord& record);
matcher::ConceptRecord concept_record_from_json(const Json& doc);

Json to_json(const matcher::MatchReport& report);

// classified.jsonl
Json to_json(const reasoner::ClassifiedRecord& record);
reasoner::ClassifiedRecord classified_record_from_json(const Json& doc);

Json to_json(const reasoner::PropertyBreakdown& breakdown);

// labels.jsonl rows: {link_id, user_label}
Json label_to_json(const std::string& link_id, const std::string& user_label);

reasoner::InferredProperty inferred_property_from_string(const std::string& text);

}  // namespace linksift::serde

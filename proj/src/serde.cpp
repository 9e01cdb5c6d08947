#include "linksift/serde.hpp"

#include <stdexcept>

namespace linksift::serde {

Json to_json(const crawl::RawHyperlink& link) {
    Json doc;
    doc["source_url"] = link.source_url;
    doc["target_url"] = link.target_url;
    doc["anchor_text"] = link.anchor_text;
    doc["paragraph_text"] = link.paragraph_text;
    doc["source_domain"] = link.source_domain;
    doc["position_index"] = link.position_index;
    return doc;
}

crawl::RawHyperlink raw_link_from_json(const Json& doc) {
    crawl::RawHyperlink link;
    link.source_url = doc.at("source_url").get<std::string>();
    link.target_url = doc.at("target_url").get<std::string>();
    link.anchor_text = doc.at("anchor_text").get<std::string>();
    link.paragraph_text = doc.at("paragraph_text").get<std::string>();
    link.source_domain = doc.at("source_domain").get<std::string>();
    link.position_index = doc.at("position_index").get<int>();
    return link;
}

Json to_json(const linkprep::FilterReport& report) {
    Json doc;
    doc["input_count"] = report.input_count;
    doc["kept_count"] = report.kept_count;
    Json reasons = Json::object();
    for (const auto& [reason, count] : report.removed_by_reason) reasons[reason] = count;
    doc["removed_by_reason"] = reasons;
    return doc;
}

Json to_json(const features::FeatureRecord& record) {
    Json doc;
    doc["link_id"] = record.link_id;
    doc["source_domain"] = record.source_domain;
    doc["context"] = {{"page_title", record.context.page_title},
                      {"keyword_metadata", record.context.keyword_metadata},
                      {"anchor_text", record.context.anchor_text},
                      {"paragraph_text", record.context.paragraph_text}};
    doc["target"] = {{"page_title", record.target.page_title},
                     {"keyword_metadata", record.target.keyword_metadata},
                     {"first_level_heading", record.target.first_level_heading}};
    doc["context_tokens"] = record.context_tokens;
    doc["target_tokens"] = record.target_tokens;
    return doc;
}

features::FeatureRecord feature_record_from_json(const Json& doc) {
    features::FeatureRecord record;
    record.link_id = doc.at("link_id").get<std::string>();
    record.source_domain = doc.at("source_domain").get<std::string>();
    const auto& ctx = doc.at("context");
    record.context.page_title = ctx.at("page_title").get<std::string>();
    record.context.keyword_metadata = ctx.at("keyword_metadata").get<std::string>();
    record.context.anchor_text = ctx.at("anchor_text").get<std::string>();
    record.context.paragraph_text = ctx.at("paragraph_text").get<std::string>();
    const auto& tgt = doc.at("target");
    record.target.page_title = tgt.at("page_title").get<std::string>();
    record.target.keyword_metadata = tgt.at("keyword_metadata").get<std::string>();
    record.target.first_level_heading = tgt.at("first_level_heading").get<std::string>();
    record.context_tokens = doc.at("context_tokens").get<std::vector<std::string>>();
    record.target_tokens = doc.at("target_tokens").get<std::vector<std::string>>();
    return record;
}

Json assignment_to_json(const std::string& link_id, const topics::TopicAssignment& a) {
    Json doc;
    doc["link_id"] = link_id;
    doc["topic"] = a.topic;
    doc["confidence"] = a.confidence;
    return doc;
}

std::pair<std::string, topics::TopicAssignment> assignment_from_json(const Json& doc) {
    topics::TopicAssignment a;
    std::string id = doc.at("link_id").get<std::string>();
    a.doc_id = id;
    a.topic = doc.at("topic").get<std::string>();
    a.confidence = doc.at("confidence").get<double>();
    return {id, a};
}

Json to_json(const topics::TopicRecord& record) {
    Json doc;
    doc["context_topic"] = record.context_topic;
    doc["target_topic"] = record.target_topic;
    doc["user_label"] = record.user_label;
    doc["source_domain"] = record.source_domain;
    doc["link_id"] = record.link_id;
    return doc;
}

topics::TopicRecord topic_record_from_json(const Json& doc) {
    topics::TopicRecord record;
    record.context_topic = doc.at("context_topic").get<std::string>();
    record.target_topic = doc.at("target_topic").get<std::string>();
    record.user_label = doc.at("user_label").get<std::string>();
    record.source_domain = doc.at("source_domain").get<std::string>();
    record.link_id = doc.at("link_id").get<std::string>();
    return record;
}

Json to_json(const topics::IntegrateReport& report) {
    Json doc;
    doc["total"] = report.total;
    doc["emitted"] = report.emitted;
    doc["excluded_context"] = report.excluded_context;
    doc["excluded_target"] = report.excluded_target;
    doc["excluded_both"] = report.excluded_both;
    doc["coverage_pct"] = report.coverage_pct();
    return doc;
}

Json to_json(const matcher::ConceptRecord& record) {
    Json doc;
    doc["source_class"] = record.source_class;
    doc["target_class"] = record.target_class;
    doc["user_label"] = record.user_label;
    doc["source_domain"] = record.source_domain;
    doc["link_id"] = record.link_id;
    return doc;
}

matcher::ConceptRecord concept_record_from_json(const Json& doc) {
    matcher::ConceptRecord record;
    record.source_class = doc.at("source_class").get<std::string>();
    record.target_class = doc.at("target_class").get<std::string>();
    record.user_label = doc.at("user_label").get<std::string>();
    record.source_domain = doc.at("source_domain").get<std::string>();
    record.link_id = doc.at("link_id").get<std::string>();
    return record;
}

Json to_json(const matcher::MatchReport& report) {
    Json doc;
    doc["total"] = report.total;
    doc["matched"] = report.matched;
    doc["excluded_source"] = report.excluded_source;
    doc["excluded_target"] = report.excluded_target;
    doc["excluded_both"] = report.excluded_both;
    doc["matched_pct"] = report.matched_pct();
    return doc;
}

Json to_json(const reasoner::ClassifiedRecord& record) {
    Json doc;
    doc["subject"] = record.subject;
    doc["object"] = record.object;
    doc["inferred_property"] = record.inferred_property.to_string();
    doc["reasoner_label"] = record.reasoner_label;
    doc["source_domain"] = record.source_domain;
    doc["user_label"] = record.user_label;
    doc["link_id"] = record.link_id;
    return doc;
}

reasoner::InferredProperty inferred_property_from_string(const std::string& text) {
    reasoner::InferredProperty p;
    if (text.rfind("OBJECT_PROPERTY(", 0) == 0 && text.back() == ')') {
        p.kind = reasoner::PropertyKind::OBJECT_PROPERTY;
        p.property_iri = text.substr(16, text.size() - 17);
        return p;
    }
    if (text == "EQUIVALENT_CLASS") p.kind = reasoner::PropertyKind::EQUIVALENT_CLASS;
    else if (text == "SUBCLASS_OF") p.kind = reasoner::PropertyKind::SUBCLASS_OF;
    else if (text == "HAS_SUPERCLASS") p.kind = reasoner::PropertyKind::HAS_SUPERCLASS;
    else if (text == "NONE") p.kind = reasoner::PropertyKind::NONE;
    else throw std::runtime_error("unknown inferred property: " + text);
    return p;
}

reasoner::ClassifiedRecord classified_record_from_json(const Json& doc) {
    reasoner::ClassifiedRecord record;
    record.subject = doc.at("subject").get<std::string>();
    record.object = doc.at("object").get<std::string>();
    record.inferred_property =
        inferred_property_from_string(doc.at("inferred_property").get<std::string>());
    record.reasoner_label = doc.at("reasoner_label").get<std::string>();
    record.source_domain = doc.at("source_domain").get<std::string>();
    record.user_label = doc.at("user_label").get<std::string>();
    record.link_id = doc.at("link_id").get<std::string>();
    return record;
}

Json to_json(const reasoner::PropertyBreakdown& breakdown) {
    Json doc;
    doc["total"] = breakdown.total;
    Json counts = Json::object();
    for (const auto& [k, n] : breakdown.counts) counts[k] = n;
    doc["counts"] = counts;
    Json fractions = Json::object();
    for (const auto& [k, f] : breakdown.fractions()) fractions[k] = f;
    doc["fractions"] = fractions;
    return doc;
}

Json label_to_json(const std::string& link_id, const std::string& user_label) {
    Json doc;
    doc["link_id"] = link_id;
    doc["user_label"] = user_label;
    return doc;
}

}  // namespace linksift::serde

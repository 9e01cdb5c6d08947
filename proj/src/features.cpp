#include "linksift/features.hpp"

#include "linksift/hash.hpp"
#include "linksift/html.hpp"
#include "linksift/url.hpp"

#include <stdexcept>

namespace linksift::features {

namespace {

std::string meta_keywords(const html::Node& root) {
    std::string content;
    bool found = false;
    html::for_each_element(root, [&](const html::Node& n) {
        if (found || n.tag != "meta") return;
        const std::string* name = n.attr("name");
        if (name == nullptr) return;
        if (linksift::url::ascii_lower(*name) != "keywords") return;
        const std::string* value = n.attr("content");
        content = value != nullptr ? html::collapse_ws(*value) : "";
        found = true;
    });
    return content;
}

std::string first_text(const html::Node& root, std::string_view tag) {
    const html::Node* n = html::first_element(root, tag);
    return n != nullptr ? html::visible_text(*n) : "";
}

}  // namespace

std::string make_link_id(const crawl::RawHyperlink& link) {
    std::string key = link.source_url + '\t' + link.target_url + '\t' + link.anchor_text +
                      '\t' + std::to_string(link.position_index);
    return hash::sha256_hex32(key);
}

TargetFeatures extract_target_features(std::string_view html_text) {
    auto doc = html::parse(html_text);
    TargetFeatures f;
    f.page_title = first_text(*doc, "title");
    f.keyword_metadata = meta_keywords(*doc);
    f.first_level_heading = first_text(*doc, "h1");
    return f;
}

ContextFeatures extract_context_features(std::string_view html_text,
                                         const crawl::RawHyperlink& link) {
    // re-extract and address the anchor by its ordinal; a mismatch means the
    // stored snapshot no longer matches the link record
    auto links = crawl::extract_links(html_text, link.source_url, link.source_domain);
    if (link.position_index < 0 || link.position_index >= static_cast<int>(links.size()))
        throw std::runtime_error("stale snapshot: no anchor at position " +
                                 std::to_string(link.position_index) + " of " +
                                 link.source_url);
    const auto& found = links[static_cast<size_t>(link.position_index)];
    if (found.target_url != link.target_url || found.anchor_text != link.anchor_text)
        throw std::runtime_error("stale snapshot: anchor at position " +
                                 std::to_string(link.position_index) + " of " +
                                 link.source_url + " does not match the link record");

    auto doc = html::parse(html_text);
    ContextFeatures f;
    f.page_title = first_text(*doc, "title");
    f.keyword_metadata = meta_keywords(*doc);
    f.anchor_text = found.anchor_text;
    f.paragraph_text = found.paragraph_text;
    return f;
}

FeatureRecord build_record(const crawl::RawHyperlink& link, std::string_view source_html,
                           std::string_view target_html,
                           const text::NormalizationConfig& cfg) {
    FeatureRecord record;
    record.link_id = make_link_id(link);
    record.source_domain = link.source_domain;
    record.context = extract_context_features(source_html, link);
    if (!target_html.empty()) record.target = extract_target_features(target_html);

    std::string context_text = record.context.page_title + ' ' +
                               record.context.keyword_metadata + ' ' +
                               record.context.anchor_text + ' ' +
                               record.context.paragraph_text;
    std::string target_text = record.target.page_title + ' ' + record.target.keyword_metadata +
                              ' ' + record.target.first_level_heading;
    record.context_tokens = text::normalize_text(context_text, cfg);
    record.target_tokens = text::normalize_text(target_text, cfg);
    return record;
}

}  // namespace linksift::features

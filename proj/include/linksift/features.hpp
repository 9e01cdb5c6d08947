#pragma once

#include "linksift/crawl.hpp"
#include "linksift/text.hpp"

#include <string>
#include <vector>

namespace linksift::features {

struct TargetFeatures {
    std::string page_title;
    std::string keyword_metadata;
    std::string first_level_heading;
};

struct ContextFeatures {
    std::string page_title;
    std::string keyword_metadata;
    std::string anchor_text;
    std::string paragraph_text;
};

struct FeatureRecord {
    std::string link_id;
    std::string source_domain;
    ContextFeatures context;
    TargetFeatures target;
    std::vector<std::string> context_tokens;
    std::vector<std::string> target_tokens;
};

// Stable identifier for a hyperlink, derived from its identity fields.
std::string make_link_id(const crawl::RawHyperlink& link);

// First <title>, first <meta name="keywords"> content, first <h1>.
// Absent elements yield empty strings; parsing never fails.
TargetFeatures extract_target_features(std::string_view html_text);

// Title/keywords as above plus the link's anchor and enclosing paragraph.
// Throws std::runtime_error when the anchor at link.position_index is not
// present in the page (stale snapshot).
ContextFeatures extract_context_features(std::string_view html_text,
                                         const crawl::RawHyperlink& link);

// Full per-link extraction. `target_html` may be empty (target not crawled);
// target features are then empty strings.
FeatureRecord build_record(const crawl::RawHyperlink& link, std::string_view source_html,
                           std::string_view target_html, const text::NormalizationConfig& cfg);

}  // namespace linksift::features

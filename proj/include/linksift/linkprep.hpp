#pragma once

#include "linksift/crawl.hpp"

#include <map>
#include <string>
#include <vector>

namespace linksift::linkprep {

enum class Reason { MEDIA_TARGET, DUPLICATE, EMPTY_ANCHOR, SELF_FRAGMENT, NON_HTTP };

const char* reason_name(Reason r);

struct FilterReport {
    long input_count = 0;
    long kept_count = 0;
    std::map<std::string, long> removed_by_reason;  // reason name -> count

    long removed_total() const;
};

struct FilterResult {
    std::vector<crawl::RawHyperlink> kept;
    FilterReport report;
};

// Keeps text hyperlinks only. Checks run per link in a fixed order:
// NON_HTTP, MEDIA_TARGET, SELF_FRAGMENT, EMPTY_ANCHOR; survivors are then
// deduplicated on (source_url, target_url, anchor_text), first occurrence
// kept. Order among kept links is preserved.
FilterResult filter_links(const std::vector<crawl::RawHyperlink>& links);

// true when the target path ends in a known media/binary extension
bool has_media_extension(const std::string& target_url);

}  // namespace linksift::linkprep

#include "linksift/linkprep.hpp"

#include "linksift/html.hpp"
#include "linksift/url.hpp"

#include <array>
#include <set>
#include <tuple>

namespace linksift::linkprep {

namespace {

// fixed, case-insensitive list keyed on the target URL path
constexpr std::array<std::string_view, 22> kMediaExtensions = {
    "jpg", "jpeg", "png", "gif", "svg", "webp", "bmp", "ico", "mp3", "wav", "ogg", "flac",
    "mp4", "avi",  "mkv", "mov", "webm", "pdf", "zip", "rar", "gz",  "exe"};

std::string strip_fragment(const std::string& u) {
    auto hash = u.find('#');
    return hash == std::string::npos ? u : u.substr(0, hash);
}

}  // namespace

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::MEDIA_TARGET: return "MEDIA_TARGET";
        case Reason::DUPLICATE: return "DUPLICATE";
        case Reason::EMPTY_ANCHOR: return "EMPTY_ANCHOR";
        case Reason::SELF_FRAGMENT: return "SELF_FRAGMENT";
        case Reason::NON_HTTP: return "NON_HTTP";
    }
    return "?";
}

long FilterReport::removed_total() const {
    long total = 0;
    for (const auto& [_, n] : removed_by_reason) total += n;
    return total;
}

bool has_media_extension(const std::string& target_url) {
    auto parsed = url::parse(target_url);
    std::string path = parsed && !parsed->path.empty() ? parsed->path : target_url;
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot == std::string::npos || dot + 1 >= name.size()) return false;
    std::string ext = url::ascii_lower(name.substr(dot + 1));
    for (auto e : kMediaExtensions)
        if (ext == e) return true;
    return false;
}

FilterResult filter_links(const std::vector<crawl::RawHyperlink>& links) {
    FilterResult result;
    FilterReport& report = result.report;
    report.input_count = static_cast<long>(links.size());
    for (Reason r : {Reason::MEDIA_TARGET, Reason::DUPLICATE, Reason::EMPTY_ANCHOR,
                     Reason::SELF_FRAGMENT, Reason::NON_HTTP})
        report.removed_by_reason[reason_name(r)] = 0;

    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const auto& link : links) {
        auto remove = [&](Reason r) { ++report.removed_by_reason[reason_name(r)]; };

        auto target = url::parse(link.target_url);
        if (!target || !target->is_http()) {
            remove(Reason::NON_HTTP);
            continue;
        }
        if (has_media_extension(link.target_url)) {
            remove(Reason::MEDIA_TARGET);
            continue;
        }
        if (strip_fragment(link.target_url) == strip_fragment(link.source_url)) {
            remove(Reason::SELF_FRAGMENT);
            continue;
        }
        if (html::collapse_ws(link.anchor_text).empty()) {
            remove(Reason::EMPTY_ANCHOR);
            continue;
        }
        auto key = std::make_tuple(link.source_url, link.target_url, link.anchor_text);
        if (!seen.insert(key).second) {
            remove(Reason::DUPLICATE);
            continue;
        }
        result.kept.push_back(link);
    }
    report.kept_count = static_cast<long>(result.kept.size());
    return result;
}

}  // namespace linksift::linkprep

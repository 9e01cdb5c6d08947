#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace linksift::crawl {

struct CrawlConfig {
    std::vector<std::string> seed_urls;
    int max_pages_per_domain = 100;
    int max_depth = 5;
    int per_host_delay_ms = 200;
    int fetch_timeout_ms = 10000;
    std::string user_agent = "linksift/0.1";

    // throws std::invalid_argument when out of range
    void validate() const;
};

struct PageSnapshot {
    std::string url;     // normalized absolute URL after redirects
    std::string domain;  // registrable domain of the host
    int fetch_status = 0;
    std::string html;       // empty for non-HTML content
    std::string fetched_at;  // ISO-8601 UTC
};

struct RawHyperlink {
    std::string source_url;
    std::string target_url;
    std::string anchor_text;
    std::string paragraph_text;
    std::string source_domain;
    int position_index = 0;
};

struct FetchFailure {
    std::string url;
    std::string error;
};

struct CrawlResult {
    std::vector<PageSnapshot> snapshots;
    std::vector<RawHyperlink> links;
    std::vector<FetchFailure> failures;
    int skipped_anchors = 0;  // anchors without a usable href
};

// Transport-level result of a single GET. status 0 means the request never
// produced an HTTP response; `error` then explains why.
struct FetchOutcome {
    int status = 0;
    std::string error;
    std::string content_type;
    std::string location;  // redirect target, when present
    std::string body;
};

class Fetcher {
  public:
    virtual ~Fetcher() = default;
    virtual FetchOutcome get(const std::string& absolute_url, const std::string& user_agent,
                             int timeout_ms) = 0;
};

// cpp-httplib backed fetcher (http and https).
std::unique_ptr<Fetcher> make_http_fetcher();

// Per-anchor extraction. `base_url` must be absolute; `source_domain` is the
// registrable domain recorded on every link. Skipped anchors (no href, empty
// href, fragment-only href, unresolvable href) are counted via
// `skipped_out` when given.
std::vector<RawHyperlink> extract_links(std::string_view html_text, const std::string& base_url,
                                        const std::string& source_domain,
                                        int* skipped_out = nullptr);

// Breadth-first crawl of the seed's registrable domain. Fetch failures are
// recorded, never fatal. Output canonicalized: snapshots by url, links by
// (source_url, position_index).
CrawlResult crawl_domain(const CrawlConfig& config, const std::string& seed, Fetcher& fetcher);

// Crawls every seed in turn with a shared politeness ledger and merges the
// results canonically.
CrawlResult crawl_all(const CrawlConfig& config, Fetcher& fetcher);

// Parsed robots.txt rules for one host; only Disallow is honored.
class RobotsRules {
  public:
    static RobotsRules parse(std::string_view body, const std::string& user_agent);
    static RobotsRules allow_all();

    bool allows(const std::string& path) const;

  private:
    std::vector<std::string> disallow_;
};

// Seed list file: one absolute URL per line, '#' comments allowed.
std::vector<std::string> read_seed_file(const std::string& path);

}  // namespace linksift::crawl

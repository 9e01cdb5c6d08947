#include "linksift/crawl.hpp"

#include "linksift/html.hpp"
#include "linksift/url.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <deque>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace linksift::crawl {

namespace {

constexpr int kMaxRedirects = 5;

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool looks_like_html(const std::string& content_type) {
    if (content_type.empty()) return true;  // assume HTML when the server is silent
    auto lower = url::ascii_lower(content_type);
    return lower.find("text/html") != std::string::npos ||
           lower.find("application/xhtml") != std::string::npos;
}

std::string authority_of(const url::Url& u) {
    std::string a = u.host;
    if (u.port >= 0) a += ":" + std::to_string(u.port);
    return a;
}

class HttpFetcher final : public Fetcher {
  public:
    FetchOutcome get(const std::string& absolute_url, const std::string& user_agent,
                     int timeout_ms) override {
        FetchOutcome out;
        auto parsed = url::parse(absolute_url);
        if (!parsed || !parsed->is_http()) {
            out.error = "unsupported url: " + absolute_url;
            return out;
        }
        std::string origin = parsed->scheme + "://" + authority_of(*parsed);
        httplib::Client client(origin);
        client.set_follow_location(false);  // redirects handled by the crawler
        client.set_connection_timeout(0, timeout_ms * 1000LL);
        client.set_read_timeout(0, timeout_ms * 1000LL);
        client.set_write_timeout(0, timeout_ms * 1000LL);

        std::string target = parsed->path.empty() ? "/" : parsed->path;
        if (!parsed->query.empty()) target += "?" + parsed->query;

        auto res = client.Get(target, {{"User-Agent", user_agent}});
        if (!res) {
            out.error = httplib::to_string(res.error());
            return out;
        }
        out.status = res->status;
        out.content_type = res->get_header_value("Content-Type");
        out.location = res->get_header_value("Location");
        out.body = res->body;
        return out;
    }
};

// nearest enclosing <p>, else nearest block-level ancestor
// (div/li/td/section/article) truncated to 500 chars, else a 500-char
// prefix of the body text
std::string paragraph_for(const html::Node& anchor, const html::Node& root) {
    auto truncated = [](std::string s) {
        constexpr size_t kMax = 500;
        if (s.size() <= kMax) return s;
        size_t cut = kMax;
        while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;
        s.resize(cut);
        return s;
    };
    const html::Node* block = nullptr;
    for (const html::Node* n = anchor.parent; n != nullptr; n = n->parent) {
        if (n->type != html::Node::Type::Element) continue;
        if (n->tag == "p") return html::visible_text(*n);
        if (block == nullptr && (n->tag == "div" || n->tag == "li" || n->tag == "td" ||
                                 n->tag == "section" || n->tag == "article"))
            block = n;
    }
    if (block != nullptr) return truncated(html::visible_text(*block));
    const html::Node* body = html::first_element(root, "body");
    return truncated(html::visible_text(body != nullptr ? *body : root));
}

void collect_anchors(const html::Node& n, std::vector<const html::Node*>& out) {
    if (n.type == html::Node::Type::Element && n.tag == "a") out.push_back(&n);
    for (const auto& kid : n.kids) collect_anchors(*kid, out);
}

}  // namespace

void CrawlConfig::validate() const {
    if (seed_urls.empty()) throw std::invalid_argument("seed list is empty");
    if (max_pages_per_domain < 1)
        throw std::invalid_argument("max_pages_per_domain must be >= 1");
    if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
    if (per_host_delay_ms < 0) throw std::invalid_argument("per_host_delay must be >= 0");
    for (const auto& s : seed_urls) {
        auto u = url::parse(s);
        if (!u || u->scheme.empty() || !u->has_authority)
            throw std::invalid_argument("seed is not an absolute URL: " + s);
    }
}

std::unique_ptr<Fetcher> make_http_fetcher() { return std::make_unique<HttpFetcher>(); }

std::vector<RawHyperlink> extract_links(std::string_view html_text, const std::string& base_url,
                                        const std::string& source_domain, int* skipped_out) {
    auto doc = html::parse(html_text);
    std::vector<const html::Node*> anchors;
    collect_anchors(*doc, anchors);

    std::string source = url::normalize(base_url).value_or(base_url);
    std::vector<RawHyperlink> links;
    int skipped = 0;
    for (const html::Node* a : anchors) {
        const std::string* href = a->attr("href");
        std::string trimmed;
        if (href != nullptr) trimmed = html::collapse_ws(*href);
        if (trimmed.empty() || trimmed[0] == '#') {
            ++skipped;
            continue;
        }
        auto target = url::resolve_href(base_url, trimmed);
        if (!target || target->empty()) {
            ++skipped;
            continue;
        }
        RawHyperlink link;
        link.source_url = source;
        link.target_url = *target;
        link.anchor_text = html::visible_text(*a);
        link.paragraph_text = paragraph_for(*a, *doc);
        link.source_domain = source_domain;
        link.position_index = static_cast<int>(links.size());
        links.push_back(std::move(link));
    }
    if (skipped_out != nullptr) *skipped_out = skipped;
    return links;
}

RobotsRules RobotsRules::parse(std::string_view body, const std::string& user_agent) {
    RobotsRules rules;
    std::string ua_lower = url::ascii_lower(user_agent);

    bool group_applies = false;
    bool in_group_header = false;
    std::string line;
    size_t pos = 0;
    while (pos <= body.size()) {
        auto nl = body.find('\n', pos);
        line = std::string(body.substr(pos, nl == std::string_view::npos ? body.size() - pos
                                                                         : nl - pos));
        pos = nl == std::string_view::npos ? body.size() + 1 : nl + 1;

        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = html::collapse_ws(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string field = url::ascii_lower(html::collapse_ws(line.substr(0, colon)));
        std::string value = html::collapse_ws(line.substr(colon + 1));

        if (field == "user-agent") {
            std::string token = url::ascii_lower(value);
            bool matches = token == "*" || ua_lower.find(token) != std::string::npos;
            if (in_group_header) {
                group_applies = group_applies || matches;
            } else {
                group_applies = matches;
                in_group_header = true;
            }
        } else if (field == "disallow") {
            in_group_header = false;
            if (group_applies && !value.empty()) rules.disallow_.push_back(value);
        } else {
            in_group_header = false;
        }
    }
    return rules;
}

RobotsRules RobotsRules::allow_all() { return RobotsRules{}; }

bool RobotsRules::allows(const std::string& path) const {
    for (const auto& prefix : disallow_)
        if (path.rfind(prefix, 0) == 0) return false;
    return true;
}

namespace {

// politeness ledger shared across seeds; one entry per authority
class HostThrottle {
  public:
    explicit HostThrottle(int delay_ms) : delay_(delay_ms) {}

    void wait(const std::string& authority) {
        auto now = std::chrono::steady_clock::now();
        auto it = last_.find(authority);
        if (it != last_.end()) {
            auto next_ok = it->second + delay_;
            if (now < next_ok) {
                std::this_thread::sleep_for(next_ok - now);
                now = std::chrono::steady_clock::now();
            }
        }
        last_[authority] = now;
    }

  private:
    std::chrono::milliseconds delay_;
    std::unordered_map<std::string, std::chrono::steady_clock::time_point> last_;
};

struct CrawlSession {
    const CrawlConfig& config;
    Fetcher& fetcher;
    HostThrottle& throttle;
    std::unordered_map<std::string, RobotsRules> robots;

    const RobotsRules& robots_for(const url::Url& u) {
        std::string authority = u.scheme + "://" + authority_of(u);
        auto it = robots.find(authority);
        if (it != robots.end()) return it->second;
        throttle.wait(authority_of(u));
        auto outcome =
            fetcher.get(authority + "/robots.txt", config.user_agent, config.fetch_timeout_ms);
        RobotsRules rules = (outcome.status >= 200 && outcome.status < 300)
                                ? RobotsRules::parse(outcome.body, config.user_agent)
                                : RobotsRules::allow_all();
        return robots.emplace(authority, std::move(rules)).first->second;
    }

    // follows up to kMaxRedirects hops; returns the final outcome and the
    // final normalized URL via `final_url`
    FetchOutcome fetch_following(const std::string& start_url, std::string& final_url,
                                 std::string& error) {
        std::string current = start_url;
        for (int hop = 0; hop <= kMaxRedirects; ++hop) {
            auto parsed = url::parse(current);
            if (!parsed || !parsed->is_http()) {
                error = "unsupported url: " + current;
                return {};
            }
            throttle.wait(authority_of(*parsed));
            auto outcome = fetcher.get(current, config.user_agent, config.fetch_timeout_ms);
            if (outcome.status == 0) {
                error = outcome.error.empty() ? "connection failed" : outcome.error;
                return {};
            }
            bool redirect = outcome.status >= 300 && outcome.status < 400 &&
                            !outcome.location.empty();
            if (!redirect) {
                final_url = url::normalize(current).value_or(current);
                return outcome;
            }
            auto next = url::resolve_href(current, outcome.location);
            if (!next) {
                error = "unresolvable redirect from " + current;
                return {};
            }
            current = *next;
        }
        error = "too many redirects from " + start_url;
        return {};
    }
};

CrawlResult crawl_one(CrawlSession& session, const std::string& seed) {
    const CrawlConfig& config = session.config;
    CrawlResult result;

    auto seed_norm = url::normalize(seed);
    if (!seed_norm) {
        result.failures.push_back({seed, "seed does not parse as an absolute URL"});
        return result;
    }
    auto seed_url = url::parse(*seed_norm);
    std::string domain = url::registrable_domain(seed_url->host);

    std::deque<std::pair<std::string, int>> frontier;  // (url, depth), FIFO
    std::unordered_set<std::string> seen;
    frontier.emplace_back(*seed_norm, 0);
    seen.insert(*seed_norm);

    while (!frontier.empty() &&
           static_cast<int>(result.snapshots.size()) < config.max_pages_per_domain) {
        auto [current, depth] = frontier.front();
        frontier.pop_front();

        auto parsed = url::parse(current);
        if (!parsed || !parsed->is_http()) continue;

        if (!session.robots_for(*parsed).allows(parsed->path)) {
            result.failures.push_back({current, "disallowed by robots.txt"});
            continue;
        }

        std::string final_url;
        std::string error;
        auto outcome = session.fetch_following(current, final_url, error);
        if (outcome.status == 0) {
            result.failures.push_back({current, error});
            continue;
        }
        auto final_parsed = url::parse(final_url);
        std::string final_domain = url::registrable_domain(final_parsed->host);
        if (final_domain != domain) {
            result.failures.push_back({current, "redirected outside domain to " + final_url});
            continue;
        }
        if (final_url != current && !seen.insert(final_url).second)
            continue;  // redirect target already snapshotted

        PageSnapshot snap;
        snap.url = final_url;
        snap.domain = final_domain;
        snap.fetch_status = outcome.status;
        snap.fetched_at = iso8601_now();
        bool is_html = looks_like_html(outcome.content_type);
        if (is_html) snap.html = outcome.body;
        result.snapshots.push_back(std::move(snap));

        if (outcome.status < 200 || outcome.status >= 300 || !is_html) continue;

        int skipped = 0;
        auto links = extract_links(outcome.body, final_url, domain, &skipped);
        result.skipped_anchors += skipped;
        for (const auto& link : links) {
            if (depth < config.max_depth) {
                auto target = url::parse(link.target_url);
                if (target && target->is_http() &&
                    url::registrable_domain(target->host) == domain &&
                    seen.insert(link.target_url).second)
                    frontier.emplace_back(link.target_url, depth + 1);
            }
        }
        result.links.insert(result.links.end(), links.begin(), links.end());
    }
    return result;
}

void canonicalize(CrawlResult& result) {
    std::sort(result.snapshots.begin(), result.snapshots.end(),
              [](const PageSnapshot& a, const PageSnapshot& b) { return a.url < b.url; });
    std::stable_sort(result.links.begin(), result.links.end(),
                     [](const RawHyperlink& a, const RawHyperlink& b) {
                         return std::tie(a.source_url, a.position_index) <
                                std::tie(b.source_url, b.position_index);
                     });
}

}  // namespace

CrawlResult crawl_domain(const CrawlConfig& config, const std::string& seed, Fetcher& fetcher) {
    config.validate();
    HostThrottle throttle(config.per_host_delay_ms);
    CrawlSession session{config, fetcher, throttle, {}};
    CrawlResult result = crawl_one(session, seed);
    canonicalize(result);
    return result;
}

CrawlResult crawl_all(const CrawlConfig& config, Fetcher& fetcher) {
    config.validate();
    HostThrottle throttle(config.per_host_delay_ms);
    CrawlSession session{config, fetcher, throttle, {}};
    CrawlResult merged;
    for (const auto& seed : config.seed_urls) {
        CrawlResult one = crawl_one(session, seed);
        merged.snapshots.insert(merged.snapshots.end(),
                                std::make_move_iterator(one.snapshots.begin()),
                                std::make_move_iterator(one.snapshots.end()));
        merged.links.insert(merged.links.end(), std::make_move_iterator(one.links.begin()),
                            std::make_move_iterator(one.links.end()));
        merged.failures.insert(merged.failures.end(),
                               std::make_move_iterator(one.failures.begin()),
                               std::make_move_iterator(one.failures.end()));
        merged.skipped_anchors += one.skipped_anchors;
    }
    canonicalize(merged);
    return merged;
}

std::vector<std::string> read_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file: " + path);
    std::vector<std::string> seeds;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = html::collapse_ws(line);
        if (!line.empty()) seeds.push_back(line);
    }
    return seeds;
}

}  // namespace linksift::crawl

#pragma once

// Socket-free Fetcher for crawler unit tests.

#include "linksift/crawl.hpp"

#include <map>
#include <string>
#include <vector>

namespace testsupport {

class StubFetcher final : public linksift::crawl::Fetcher {
  public:
    void add(const std::string& url, std::string body, int status = 200,
             std::string content_type = "text/html") {
        linksift::crawl::FetchOutcome out;
        out.status = status;
        out.body = std::move(body);
        out.content_type = std::move(content_type);
        pages_[url] = std::move(out);
    }

    void add_redirect(const std::string& url, const std::string& location, int status = 301) {
        linksift::crawl::FetchOutcome out;
        out.status = status;
        out.location = location;
        pages_[url] = std::move(out);
    }

    linksift::crawl::FetchOutcome get(const std::string& url, const std::string&,
                                      int) override {
        requested.push_back(url);
        auto it = pages_.find(url);
        if (it != pages_.end()) return it->second;
        linksift::crawl::FetchOutcome out;
        if (serve_404_for_missing) {
            out.status = 404;
        } else {
            out.error = "connection refused";
        }
        return out;
    }

    bool serve_404_for_missing = true;
    std::vector<std::string> requested;

  private:
    std::map<std::string, linksift::crawl::FetchOutcome> pages_;
};

}  // namespace testsupport

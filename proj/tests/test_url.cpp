#include "linksift/url.hpp"

#include "doctest.h"

using namespace linksift;

TEST_CASE("absolute url parsing and normalization") {
    auto n = url::normalize("HTTP://Example.COM:80/a/./b/../c?x=1#frag");
    REQUIRE(n.has_value());
    CHECK(*n == "http://example.com/a/c?x=1");

    CHECK(*url::normalize("https://example.com:443/") == "https://example.com/");
    CHECK(*url::normalize("https://example.com:8443/") == "https://example.com:8443/");
    CHECK(*url::normalize("http://example.com") == "http://example.com/");
    CHECK(!url::normalize("not a url at all").has_value());
    CHECK(!url::normalize("relative/path").has_value());
}

TEST_CASE("query strings survive normalization") {
    CHECK(*url::normalize("http://x.com/p?b=2&a=1") == "http://x.com/p?b=2&a=1");
}

TEST_CASE("relative reference resolution") {
    CHECK(*url::resolve_href("http://x.com/dir/page.html", "a.html") ==
          "http://x.com/dir/a.html");
    CHECK(*url::resolve_href("http://x.com/", "a.html") == "http://x.com/a.html");
    CHECK(*url::resolve_href("http://x.com/dir/page.html", "/root.html") ==
          "http://x.com/root.html");
    CHECK(*url::resolve_href("http://x.com/dir/page.html", "../up.html") ==
          "http://x.com/up.html");
    CHECK(*url::resolve_href("http://x.com/a", "//other.org/b") == "http://other.org/b");
    CHECK(*url::resolve_href("http://x.com/a", "https://other.org/b") == "https://other.org/b");
    // fragment dropped by normalization
    CHECK(*url::resolve_href("http://x.com/", "a.html#sec") == "http://x.com/a.html");
}

TEST_CASE("opaque schemes pass through") {
    auto mail = url::resolve_href("http://x.com/", "mailto:someone@example.org");
    REQUIRE(mail.has_value());
    CHECK(*mail == "mailto:someone@example.org");
    auto u = url::parse("javascript:void(0)");
    REQUIRE(u.has_value());
    CHECK(u->scheme == "javascript");
    CHECK(!u->is_http());
}

TEST_CASE("registrable domain") {
    CHECK(url::registrable_domain("www.example.com") == "example.com");
    CHECK(url::registrable_domain("example.com") == "example.com");
    CHECK(url::registrable_domain("a.b.example.co.uk") == "example.co.uk");
    CHECK(url::registrable_domain("localhost") == "localhost");
    CHECK(url::registrable_domain("127.0.0.1") == "127.0.0.1");
    CHECK(url::registrable_domain("WWW.Example.COM") == "example.com");
}

TEST_CASE("urls with stray whitespace") {
    CHECK(*url::resolve_href("http://x.com/", "  a.html  ") == "http://x.com/a.html");
    CHECK(*url::resolve_href("http://x.com/", "a b.html") == "http://x.com/a%20b.html");
}

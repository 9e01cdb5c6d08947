#include "linksift/html.hpp"

#include "doctest.h"

#include <random>

using namespace linksift;

TEST_CASE("basic tree and visible text") {
    auto doc = html::parse("<html><body><p>Hello <b>world</b>!</p></body></html>");
    const html::Node* p = html::first_element(*doc, "p");
    REQUIRE(p != nullptr);
    CHECK(html::visible_text(*p) == "Hello world !");
}

TEST_CASE("attributes, case and quoting") {
    auto doc = html::parse(R"(<a HREF='x.html' Title=plain data-x="1">go</a>)");
    const html::Node* a = html::first_element(*doc, "a");
    REQUIRE(a != nullptr);
    REQUIRE(a->attr("href") != nullptr);
    CHECK(*a->attr("href") == "x.html");
    CHECK(*a->attr("title") == "plain");
    CHECK(html::visible_text(*a) == "go");
}

TEST_CASE("script and style content is invisible") {
    auto doc = html::parse(
        "<head><style>p { color: red }</style><script>var a = '<p>no</p>';</script></head>"
        "<body>text</body>");
    CHECK(html::visible_text(*doc) == "text");
}

TEST_CASE("comments and doctype are skipped") {
    auto doc = html::parse("<!DOCTYPE html><!-- a <p> comment --><p>real</p>");
    CHECK(html::visible_text(*doc) == "real");
}

TEST_CASE("entities decode") {
    CHECK(html::decode_entities("a &amp; b &lt;c&gt; &#65; &#x42;") == "a & b <c> A B");
    CHECK(html::decode_entities("&unknown; stays") == "&unknown; stays");
    auto doc = html::parse("<p>fish &amp; chips</p>");
    CHECK(html::visible_text(*doc) == "fish & chips");
}

TEST_CASE("unclosed and mismatched tags do not break the tree") {
    auto doc = html::parse("<div><p>one<p>two</div><td>stray</i>");
    // two sibling paragraphs: the second <p> implies closing the first
    const html::Node* div = html::first_element(*doc, "div");
    REQUIRE(div != nullptr);
    int p_children = 0;
    for (const auto& kid : div->kids)
        if (kid->type == html::Node::Type::Element && kid->tag == "p") ++p_children;
    CHECK(p_children == 2);
    CHECK(html::visible_text(*doc) == "one two stray");
}

TEST_CASE("nbsp collapses like whitespace") {
    auto doc = html::parse("<p>a&nbsp;&nbsp;b</p>");
    CHECK(html::visible_text(*doc) == "a b");
}

TEST_CASE("title is rcdata") {
    auto doc = html::parse("<title>One &amp; <two></title><p>x</p>");
    const html::Node* title = html::first_element(*doc, "title");
    REQUIRE(title != nullptr);
    CHECK(html::visible_text(*title) == "One & <two>");
}

TEST_CASE("parser survives arbitrary bytes") {
    std::mt19937 rng(99);
    for (int round = 0; round < 200; ++round) {
        std::string junk;
        size_t len = rng() % 400;
        for (size_t i = 0; i < len; ++i) junk += static_cast<char>(rng() & 0xff);
        auto doc = html::parse(junk);
        CHECK(doc != nullptr);
        html::visible_text(*doc);  // must not throw
    }
    // pathological but structured inputs
    for (const char* evil : {"<", "<a", "<a href=", "<a href='unterminated", "</", "<!",
                             "<!--", "<p><p><p>", "<script>never closed", "&#xZZ;", "&#;"}) {
        auto doc = html::parse(evil);
        CHECK(doc != nullptr);
    }
}

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace linksift::html {

// Minimal tag-soup DOM. The parser never fails: any byte sequence yields a
// tree, possibly consisting of a single text node.
struct Node {
    enum class Type { Document, Element, Text };

    Type type = Type::Document;
    std::string tag;  // lower-case, elements only
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string text;  // text nodes only, entities decoded
    std::vector<std::unique_ptr<Node>> kids;
    Node* parent = nullptr;

    // nullptr when the attribute is absent; name matched case-insensitively
    const std::string* attr(std::string_view name) const;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr parse(std::string_view src);

// Pre-order traversal over elements.
void for_each_element(const Node& root, const std::function<void(const Node&)>& fn);

const Node* first_element(const Node& root, std::string_view tag);

// Concatenated text of the subtree, whitespace-collapsed and trimmed.
// script/style/noscript/template subtrees are skipped.
std::string visible_text(const Node& n);

// Collapse ASCII whitespace runs (and U+00A0) to single spaces and trim.
std::string collapse_ws(std::string_view s);

std::string decode_entities(std::string_view s);

}  // namespace linksift::html

#include "linksift/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace linksift::html {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

const std::unordered_set<std::string_view> kVoid = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr"};

// script/style: raw text, no entity decoding; title/textarea: text with entities
const std::unordered_set<std::string_view> kRawText = {"script", "style"};
const std::unordered_set<std::string_view> kRcdata = {"title", "textarea"};

const std::unordered_map<std::string_view, uint32_t> kEntities = {
    {"amp", '&'},    {"lt", '<'},     {"gt", '>'},     {"quot", '"'},   {"apos", '\''},
    {"nbsp", 0xA0},  {"copy", 0xA9},  {"reg", 0xAE},   {"trade", 0x2122},
    {"hellip", 0x2026}, {"mdash", 0x2014}, {"ndash", 0x2013}, {"lsquo", 0x2018},
    {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D}, {"middot", 0xB7},
    {"bull", 0x2022}, {"laquo", 0xAB}, {"raquo", 0xBB}, {"times", 0xD7},
    {"divide", 0xF7}, {"sect", 0xA7},  {"para", 0xB6},  {"deg", 0xB0},
    {"plusmn", 0xB1}, {"frac12", 0xBD}, {"iexcl", 0xA1}, {"cent", 0xA2},
    {"pound", 0xA3},  {"euro", 0x20AC}, {"yen", 0xA5},   {"shy", 0xAD}};

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x110000) {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        auto doc = std::make_unique<Node>();
        doc->type = Node::Type::Document;
        stack_.push_back(doc.get());
        while (pos_ < src_.size()) step();
        flush_text();
        return doc;
    }

  private:
    std::string_view src_;
    size_t pos_ = 0;
    std::vector<Node*> stack_;
    std::string pending_text_;

    Node* top() { return stack_.back(); }

    void flush_text() {
        if (pending_text_.empty()) return;
        auto node = std::make_unique<Node>();
        node->type = Node::Type::Text;
        node->text = decode_entities(pending_text_);
        node->parent = top();
        top()->kids.push_back(std::move(node));
        pending_text_.clear();
    }

    void append_raw_text(Node* parent, std::string_view raw, bool decode) {
        auto node = std::make_unique<Node>();
        node->type = Node::Type::Text;
        node->text = decode ? decode_entities(raw) : std::string(raw);
        node->parent = parent;
        parent->kids.push_back(std::move(node));
    }

    void step() {
        auto lt = src_.find('<', pos_);
        if (lt == std::string_view::npos) {
            pending_text_.append(src_.substr(pos_));
            pos_ = src_.size();
            return;
        }
        pending_text_.append(src_.substr(pos_, lt - pos_));
        pos_ = lt;

        if (src_.compare(pos_, 4, "<!--") == 0) {
            auto end = src_.find("-->", pos_ + 4);
            pos_ = end == std::string_view::npos ? src_.size() : end + 3;
            return;
        }
        if (pos_ + 1 < src_.size() && (src_[pos_ + 1] == '!' || src_[pos_ + 1] == '?')) {
            auto end = src_.find('>', pos_);
            pos_ = end == std::string_view::npos ? src_.size() : end + 1;
            return;
        }
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
            size_t i = pos_ + 2;
            size_t start = i;
            while (i < src_.size() && src_[i] != '>' && !std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
            std::string tag = lower(src_.substr(start, i - start));
            auto end = src_.find('>', i);
            pos_ = end == std::string_view::npos ? src_.size() : end + 1;
            close_tag(tag);
            return;
        }
        if (pos_ + 1 >= src_.size() ||
            !std::isalpha(static_cast<unsigned char>(src_[pos_ + 1]))) {
            // stray '<' – literal text
            pending_text_ += '<';
            ++pos_;
            return;
        }
        open_tag();
    }

    void open_tag() {
        size_t i = pos_ + 1;
        size_t start = i;
        while (i < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '-' ||
                src_[i] == ':'))
            ++i;
        std::string tag = lower(src_.substr(start, i - start));

        std::vector<std::pair<std::string, std::string>> attrs;
        bool self_closing = false;
        while (i < src_.size() && src_[i] != '>') {
            if (std::isspace(static_cast<unsigned char>(src_[i]))) {
                ++i;
                continue;
            }
            if (src_[i] == '/') {
                self_closing = true;
                ++i;
                continue;
            }
            size_t name_start = i;
            while (i < src_.size() && src_[i] != '=' && src_[i] != '>' && src_[i] != '/' &&
                   !std::isspace(static_cast<unsigned char>(src_[i])))
                ++i;
            std::string name = lower(src_.substr(name_start, i - name_start));
            std::string value;
            while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
            if (i < src_.size() && src_[i] == '=') {
                ++i;
                while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
                if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
                    char quote = src_[i++];
                    size_t vstart = i;
                    while (i < src_.size() && src_[i] != quote) ++i;
                    value = decode_entities(src_.substr(vstart, i - vstart));
                    if (i < src_.size()) ++i;
                } else {
                    size_t vstart = i;
                    while (i < src_.size() && src_[i] != '>' &&
                           !std::isspace(static_cast<unsigned char>(src_[i])))
                        ++i;
                    value = decode_entities(src_.substr(vstart, i - vstart));
                }
            }
            if (!name.empty()) attrs.emplace_back(std::move(name), std::move(value));
        }
        pos_ = i < src_.size() ? i + 1 : src_.size();

        flush_text();
        implied_close(tag);

        auto node = std::make_unique<Node>();
        node->type = Node::Type::Element;
        node->tag = tag;
        node->attrs = std::move(attrs);
        node->parent = top();
        Node* raw = node.get();
        top()->kids.push_back(std::move(node));

        if (self_closing || kVoid.count(tag)) return;

        if (kRawText.count(tag) || kRcdata.count(tag)) {
            consume_raw_content(raw, tag, kRcdata.count(tag) != 0);
            return;
        }
        stack_.push_back(raw);
    }

    // content runs to the matching close tag without nested parsing
    void consume_raw_content(Node* element, const std::string& tag, bool decode) {
        std::string close = "</" + tag;
        size_t i = pos_;
        while (i < src_.size()) {
            auto cand = src_.find('<', i);
            if (cand == std::string_view::npos) break;
            if (cand + close.size() <= src_.size() &&
                iequals(src_.substr(cand, close.size()), close)) {
                append_raw_text(element, src_.substr(pos_, cand - pos_), decode);
                auto end = src_.find('>', cand);
                pos_ = end == std::string_view::npos ? src_.size() : end + 1;
                return;
            }
            i = cand + 1;
        }
        append_raw_text(element, src_.substr(pos_), decode);
        pos_ = src_.size();
    }

    // HTML auto-closing: a new <p> closes an open <p>, <li> closes <li>,
    // table cells close cells, <a> closes <a>.
    void implied_close(const std::string& tag) {
        static const std::unordered_map<std::string_view,
                                        std::vector<std::string_view>>
            rules = {{"p", {"p"}},       {"li", {"li"}},     {"td", {"td", "th"}},
                     {"th", {"td", "th"}}, {"tr", {"tr", "td", "th"}},
                     {"option", {"option"}}, {"a", {"a"}},   {"dt", {"dt", "dd"}},
                     {"dd", {"dt", "dd"}}};
        auto it = rules.find(tag);
        if (it == rules.end()) return;
        for (size_t i = stack_.size(); i-- > 1;) {
            const std::string& open = stack_[i]->tag;
            if (std::find(it->second.begin(), it->second.end(), open) != it->second.end()) {
                stack_.resize(i);
                return;
            }
            // do not auto-close through sectioning containers
            if (open == "div" || open == "section" || open == "article" || open == "body" ||
                open == "html" || open == "table")
                return;
        }
    }

    void close_tag(const std::string& tag) {
        flush_text();
        for (size_t i = stack_.size(); i-- > 1;) {
            if (stack_[i]->tag == tag) {
                stack_.resize(i);
                return;
            }
        }
        // unmatched close tag: ignore
    }
};

void visible_text_rec(const Node& n, std::string& out) {
    if (n.type == Node::Type::Text) {
        out += n.text;
        out += ' ';
        return;
    }
    if (n.type == Node::Type::Element &&
        (n.tag == "script" || n.tag == "style" || n.tag == "noscript" || n.tag == "template"))
        return;
    for (const auto& kid : n.kids) visible_text_rec(*kid, out);
}

}  // namespace

const std::string* Node::attr(std::string_view name) const {
    for (const auto& [k, v] : attrs)
        if (iequals(k, name)) return &v;
    return nullptr;
}

NodePtr parse(std::string_view src) { return Parser(src).run(); }

void for_each_element(const Node& root, const std::function<void(const Node&)>& fn) {
    if (root.type == Node::Type::Element) fn(root);
    for (const auto& kid : root.kids) for_each_element(*kid, fn);
}

const Node* first_element(const Node& root, std::string_view tag) {
    if (root.type == Node::Type::Element && root.tag == tag) return &root;
    for (const auto& kid : root.kids)
        if (const Node* hit = first_element(*kid, tag)) return hit;
    return nullptr;
}

std::string visible_text(const Node& n) {
    std::string raw;
    visible_text_rec(n, raw);
    return collapse_ws(raw);
}

std::string collapse_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // leading whitespace dropped
    for (size_t i = 0; i < s.size(); ++i) {
        unsigned char c = s[i];
        bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
        // U+00A0 (no-break space) in UTF-8
        if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xA0) {
            ws = true;
            ++i;
        }
        if (ws) {
            if (!in_ws) out += ' ';
            in_ws = true;
        } else {
            out += static_cast<char>(c);
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out += s[i++];
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t k = 2; k < body.size() && ok; ++k) {
                    char c = body[k];
                    if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
                    cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c))
                                        ? static_cast<uint32_t>(c - '0')
                                        : static_cast<uint32_t>(std::tolower(c) - 'a' + 10));
                }
            } else {
                for (size_t k = 1; k < body.size() && ok; ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(body[k]))) ok = false;
                    cp = cp * 10 + static_cast<uint32_t>(body[k] - '0');
                }
            }
            if (ok && cp > 0 && cp < 0x110000) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            auto it = kEntities.find(body);
            if (it != kEntities.end()) {
                append_utf8(out, it->second);
                i = semi + 1;
                continue;
            }
        }
        out += s[i++];  // unknown entity kept verbatim
    }
    return out;
}

}  // namespace linksift::html

#include "linksift/url.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <vector>

namespace linksift::url {

namespace {

bool is_scheme_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Percent-encode characters that cannot appear raw inside a URL. Anchors in
// the wild contain literal spaces; browsers encode them, so do we.
std::string encode_unsafe(std::string_view s) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (c <= 0x20 || c == 0x7f || c == '"' || c == '<' || c == '>' || c == '\\' ||
            c == '^' || c == '`' || c == '{' || c == '}' || c == '|') {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xf];
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

int default_port(std::string_view scheme) {
    if (scheme == "http") return 80;
    if (scheme == "https") return 443;
    if (scheme == "ftp") return 21;
    return -1;
}

// RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
    std::string in(path);
    std::string out;
    while (!in.empty()) {
        if (in.rfind("../", 0) == 0) {
            in.erase(0, 3);
        } else if (in.rfind("./", 0) == 0) {
            in.erase(0, 2);
        } else if (in.rfind("/./", 0) == 0) {
            in.erase(0, 2);
        } else if (in == "/.") {
            in = "/";
        } else if (in.rfind("/../", 0) == 0) {
            in.erase(0, 3);
            auto pos = out.find_last_of('/');
            out.erase(pos == std::string::npos ? 0 : pos);
        } else if (in == "/..") {
            in = "/";
            auto pos = out.find_last_of('/');
            out.erase(pos == std::string::npos ? 0 : pos);
        } else if (in == "." || in == "..") {
            in.clear();
        } else {
            size_t start = in.front() == '/' ? 1 : 0;
            auto pos = in.find('/', start);
            out.append(in, 0, pos == std::string::npos ? in.size() : pos);
            in.erase(0, pos == std::string::npos ? in.size() : pos);
        }
    }
    return out;
}

std::string merge_paths(const Url& base, std::string_view ref_path) {
    if (base.has_authority && base.path.empty()) return "/" + std::string(ref_path);
    auto pos = base.path.find_last_of('/');
    if (pos == std::string::npos) return std::string(ref_path);
    return base.path.substr(0, pos + 1) + std::string(ref_path);
}

bool parse_authority(std::string_view auth, Url& u) {
    // userinfo@ is accepted and discarded
    auto at = auth.find('@');
    if (at != std::string_view::npos) auth.remove_prefix(at + 1);
    if (!auth.empty() && auth.front() == '[') {  // IPv6 literal
        auto close = auth.find(']');
        if (close == std::string_view::npos) return false;
        u.host = std::string(auth.substr(0, close + 1));
        auth.remove_prefix(close + 1);
    } else {
        auto colon = auth.find(':');
        u.host = std::string(auth.substr(0, colon));
        auth.remove_prefix(colon == std::string_view::npos ? auth.size() : colon);
    }
    if (!auth.empty() && auth.front() == ':') {
        auth.remove_prefix(1);
        if (auth.empty()) return true;  // "host:" – tolerate
        int port = 0;
        auto [p, ec] = std::from_chars(auth.data(), auth.data() + auth.size(), port);
        if (ec != std::errc() || p != auth.data() + auth.size() || port < 0 || port > 65535)
            return false;
        u.port = port;
    }
    u.has_authority = true;
    return true;
}

}  // namespace

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::optional<Url> parse(std::string_view input) {
    std::string work = encode_unsafe(trim(input));
    std::string_view s = work;
    Url u;

    // scheme
    auto colon = s.find(':');
    if (colon != std::string_view::npos && colon > 0) {
        bool ok = std::isalpha(static_cast<unsigned char>(s[0])) != 0;
        for (size_t i = 1; ok && i < colon; ++i) ok = is_scheme_char(s[i]);
        // a colon that appears after '/', '?' or '#' belongs to the path
        auto brk = s.find_first_of("/?#");
        if (ok && (brk == std::string_view::npos || colon < brk)) {
            u.scheme = ascii_lower(s.substr(0, colon));
            s.remove_prefix(colon + 1);
        }
    }

    // fragment
    auto hash = s.find('#');
    if (hash != std::string_view::npos) {
        u.fragment = std::string(s.substr(hash + 1));
        s = s.substr(0, hash);
    }

    if (s.rfind("//", 0) == 0) {
        s.remove_prefix(2);
        auto end = s.find_first_of("/?");
        std::string_view auth = s.substr(0, end);
        if (!parse_authority(auth, u)) return std::nullopt;
        s.remove_prefix(end == std::string_view::npos ? s.size() : end);
    } else if (!u.scheme.empty() && u.scheme != "http" && u.scheme != "https" &&
               u.scheme != "ftp" && u.scheme != "file") {
        // opaque scheme: mailto:, javascript:, tel:, data:, ...
        u.opaque = std::string(s);
        return u;
    }

    auto q = s.find('?');
    if (q != std::string_view::npos) {
        u.query = std::string(s.substr(q + 1));
        s = s.substr(0, q);
    }
    u.path = std::string(s);
    return u;
}

Url resolve(const Url& base, const Url& ref) {
    if (!ref.scheme.empty()) {
        Url t = ref;
        t.path = remove_dot_segments(t.path);
        return t;
    }
    Url t;
    t.scheme = base.scheme;
    if (ref.has_authority) {
        t.host = ref.host;
        t.port = ref.port;
        t.has_authority = true;
        t.path = remove_dot_segments(ref.path);
        t.query = ref.query;
    } else {
        t.host = base.host;
        t.port = base.port;
        t.has_authority = base.has_authority;
        if (ref.path.empty()) {
            t.path = base.path;
            t.query = ref.query.empty() ? base.query : ref.query;
        } else {
            t.path = ref.path.front() == '/' ? std::string(ref.path)
                                             : merge_paths(base, ref.path);
            t.path = remove_dot_segments(t.path);
            t.query = ref.query;
        }
    }
    t.fragment = ref.fragment;
    return t;
}

Url normalized(Url u) {
    u.scheme = ascii_lower(u.scheme);
    u.host = ascii_lower(u.host);
    u.fragment.clear();
    if (u.port == default_port(u.scheme)) u.port = -1;
    if (!u.opaque.empty()) return u;
    u.path = remove_dot_segments(u.path);
    if (u.has_authority && u.path.empty()) u.path = "/";
    return u;
}

std::string to_string(const Url& u) {
    std::string out;
    if (!u.scheme.empty()) {
        out += u.scheme;
        out += ':';
    }
    if (!u.opaque.empty()) {
        out += u.opaque;
        return out;
    }
    if (u.has_authority) {
        out += "//";
        out += u.host;
        if (u.port >= 0) {
            out += ':';
            out += std::to_string(u.port);
        }
    }
    out += u.path;
    if (!u.query.empty()) {
        out += '?';
        out += u.query;
    }
    if (!u.fragment.empty()) {
        out += '#';
        out += u.fragment;
    }
    return out;
}

std::optional<std::string> normalize(std::string_view absolute_url) {
    auto u = parse(absolute_url);
    if (!u || u->scheme.empty()) return std::nullopt;
    return to_string(normalized(*u));
}

std::optional<std::string> resolve_href(std::string_view base_url, std::string_view href) {
    auto base = parse(base_url);
    auto ref = parse(href);
    if (!base || base->scheme.empty() || !ref) return std::nullopt;
    if (!ref->scheme.empty() && !ref->opaque.empty())
        return to_string(normalized(*ref));  // mailto: and friends resolve to themselves
    if (ref->scheme.empty() && !base->has_authority) return std::nullopt;
    return to_string(normalized(resolve(*base, *ref)));
}

std::string registrable_domain(std::string_view host) {
    static constexpr std::array<std::string_view, 12> two_level = {
        "co.uk", "org.uk", "ac.uk", "gov.uk", "co.jp", "co.in",
        "com.au", "com.br", "co.nz", "com.cn", "co.za", "com.mx"};

    std::string h = ascii_lower(host);
    if (h.empty() || h.front() == '[') return h;  // IPv6 literal
    bool numeric = true;
    for (char c : h)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') numeric = false;
    if (numeric) return h;  // IPv4

    std::vector<std::string_view> labels;
    std::string_view rest = h;
    while (!rest.empty()) {
        auto dot = rest.find('.');
        labels.push_back(rest.substr(0, dot));
        rest.remove_prefix(dot == std::string_view::npos ? rest.size() : dot + 1);
    }
    if (labels.size() <= 1) return h;

    auto join_last = [&](size_t n) {
        std::string out;
        for (size_t i = labels.size() - n; i < labels.size(); ++i) {
            if (!out.empty()) out += '.';
            out += labels[i];
        }
        return out;
    };

    if (labels.size() >= 2) {
        std::string suffix2 = join_last(2);
        for (auto s : two_level)
            if (suffix2 == s) return labels.size() >= 3 ? join_last(3) : h;
    }
    return join_last(2);
}

}  // namespace linksift::url

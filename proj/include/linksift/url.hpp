#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace linksift::url {

// Parsed URL. For hierarchical schemes (http, https, ftp...) the authority
// fields are used; for opaque schemes (mailto:, javascript:, tel:, data:)
// everything after the colon lands in `opaque`.
struct Url {
    std::string scheme;
    std::string host;
    int port = -1;  // -1 = not present
    std::string path;
    std::string query;     // without '?'
    std::string fragment;  // without '#'
    std::string opaque;    // non-hierarchical remainder
    bool has_authority = false;

    bool is_http() const { return scheme == "http" || scheme == "https"; }
};

// Lenient RFC 3986-style parse. Accepts relative references (empty scheme).
// Returns nullopt on inputs that cannot be interpreted as a URL at all.
std::optional<Url> parse(std::string_view input);

// RFC 3986 section 5.3 reference resolution. `base` must be absolute.
Url resolve(const Url& base, const Url& ref);

// Canonical form: lower-case scheme and host, default port removed,
// dot segments resolved, fragment dropped, empty path becomes "/".
// Query strings are preserved.
Url normalized(Url u);

std::string to_string(const Url& u);

// parse + normalized + to_string for an absolute URL; nullopt when the
// input does not parse or has no scheme.
std::optional<std::string> normalize(std::string_view absolute_url);

// Resolve `href` against `base_url` and return the normalized absolute
// form. nullopt when either side fails to parse.
std::optional<std::string> resolve_href(std::string_view base_url, std::string_view href);

// "www.example.co.uk" -> "example.co.uk"; IP literals and single-label
// hosts map to themselves. Uses a small built-in list of two-level
// public suffixes; no external suffix database.
std::string registrable_domain(std::string_view host);

std::string ascii_lower(std::string_view s);

}  // namespace linksift::url

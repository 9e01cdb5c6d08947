#include "linksift/ontology.hpp"

#include "linksift/jsonl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace linksift::ontology {

namespace {

std::string strip_brackets(std::string s) {
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>')
        return s.substr(1, s.size() - 2);
    return s;
}

std::string strip_quotes(std::string s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

[[noreturn]] void fail(const std::string& source, size_t lineno, const std::string& msg) {
    throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + msg);
}

struct RawLine {
    size_t lineno;
    std::string subject;
    std::string predicate;
    std::string object;
};

}  // namespace

Ontology parse_ontology(const std::string& content, const std::string& source_name) {
    std::vector<RawLine> lines;
    {
        std::istringstream in(content);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> fields;
            size_t start = 0;
            while (true) {
                auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab == std::string::npos
                                                        ? std::string::npos
                                                        : tab - start));
                if (tab == std::string::npos) break;
                start = tab + 1;
            }
            if (fields.size() != 3)
                fail(source_name, lineno,
                     "expected three tab-separated fields, got " +
                         std::to_string(fields.size()));
            lines.push_back({lineno, strip_brackets(fields[0]), fields[1], fields[2]});
        }
    }

    Ontology o;

    // pass 1: declarations
    for (const auto& l : lines) {
        if (l.predicate != "rdf:type") continue;
        std::string kind = strip_brackets(l.object);
        if (kind == "owl:Class") {
            o.classes.insert(l.subject);
        } else if (kind == "owl:ObjectProperty") {
            o.object_properties.emplace(l.subject, Property{l.subject, {}, {}});
        } else {
            fail(source_name, l.lineno, "unknown rdf:type object: " + kind);
        }
    }

    auto require_class = [&](const std::string& iri, size_t lineno) {
        if (!o.classes.count(iri))
            fail(source_name, lineno, "IRI used but never declared as a class: " + iri);
    };

    // pass 2: axioms
    for (const auto& l : lines) {
        if (l.predicate == "rdf:type") continue;
        if (l.predicate == "rdfs:label") {
            if (!o.classes.count(l.subject) && !o.object_properties.count(l.subject))
                fail(source_name, l.lineno, "IRI used but never declared: " + l.subject);
            o.labels[l.subject] = strip_quotes(l.object);
            continue;
        }
        if (l.predicate == "rdfs:subClassOf") {
            std::string obj = strip_brackets(l.object);
            require_class(l.subject, l.lineno);
            require_class(obj, l.lineno);
            if (l.subject == obj)
                fail(source_name, l.lineno, "self-subclass axiom rejected: " + l.subject);
            o.subclass_axioms.emplace(l.subject, obj);
            continue;
        }
        if (l.predicate == "owl:equivalentClass") {
            std::string obj = strip_brackets(l.object);
            require_class(l.subject, l.lineno);
            require_class(obj, l.lineno);
            if (l.subject != obj)
                o.equivalence_axioms.emplace(std::min(l.subject, obj), std::max(l.subject, obj));
            continue;
        }
        if (l.predicate == "rdfs:domain" || l.predicate == "rdfs:range") {
            auto it = o.object_properties.find(l.subject);
            if (it == o.object_properties.end())
                fail(source_name, l.lineno,
                     "IRI used but never declared as a property: " + l.subject);
            std::string obj = strip_brackets(l.object);
            require_class(obj, l.lineno);
            if (l.predicate == "rdfs:domain")
                it->second.domain = obj;
            else
                it->second.range = obj;
            continue;
        }
        // class-level assertion: predicate must be a declared object property
        std::string pred = strip_brackets(l.predicate);
        auto prop = o.object_properties.find(pred);
        if (prop == o.object_properties.end())
            fail(source_name, l.lineno,
                 "unknown predicate (neither a keyword nor a declared property): " +
                     l.predicate);
        std::string obj = strip_brackets(l.object);
        require_class(l.subject, l.lineno);
        require_class(obj, l.lineno);
        o.property_assertions.insert({l.subject, pred, obj});
    }
    return o;
}

Ontology load_ontology(const std::string& path) {
    return parse_ontology(jsonl::read_text(path), path);
}

QueryKind query_kind_from_string(const std::string& name) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (n == "EQUIVALENT") return QueryKind::EQUIVALENT;
    if (n == "SUBCLASS") return QueryKind::SUBCLASS;
    if (n == "SUPERCLASS") return QueryKind::SUPERCLASS;
    if (n == "RELATED") return QueryKind::RELATED;
    throw std::invalid_argument("unknown query kind: " + name);
}

namespace {

class UnionFind {
  public:
    explicit UnionFind(size_t n) : parent_(n) {
        for (size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] =
                parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

struct Bitset {
    static size_t words(size_t bits) { return (bits + 63) / 64; }
    static void set(std::vector<uint64_t>& v, size_t i) { v[i >> 6] |= uint64_t{1} << (i & 63); }
    static bool test(const std::vector<uint64_t>& v, size_t i) {
        return (v[i >> 6] >> (i & 63)) & 1;
    }
    static void unite(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
        for (size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
    }
};

}  // namespace

OntologyClosure OntologyClosure::build(const Ontology& o) {
    OntologyClosure c;
    c.source_ = &o;

    // equivalence components; lexicographically smallest member represents
    std::vector<std::string> all(o.classes.begin(), o.classes.end());
    std::map<std::string, int> pos;
    for (size_t i = 0; i < all.size(); ++i) pos[all[i]] = static_cast<int>(i);
    UnionFind uf(all.size());
    for (const auto& [a, b] : o.equivalence_axioms) uf.unite(pos[a], pos[b]);

    std::map<int, std::string> smallest;  // root -> representative IRI
    for (size_t i = 0; i < all.size(); ++i) {
        int root = uf.find(static_cast<int>(i));
        auto it = smallest.find(root);
        if (it == smallest.end() || all[i] < it->second) smallest[root] = all[i];
    }
    for (size_t i = 0; i < all.size(); ++i)
        c.representative_[all[i]] = smallest[uf.find(static_cast<int>(i))];

    for (const auto& [root, rep] : smallest) {
        c.canon_index_[rep] = static_cast<int>(c.canon_order_.size());
        c.canon_order_.push_back(rep);
    }
    size_t n = c.canon_order_.size();

    // canonical subclass digraph, sub -> super
    std::vector<std::set<int>> succ(n);
    for (const auto& [sub, super] : o.subclass_axioms) {
        int a = c.canon_index_[c.representative_[sub]];
        int b = c.canon_index_[c.representative_[super]];
        if (a != b) succ[static_cast<size_t>(a)].insert(b);
    }

    // Tarjan SCC; ids come out in reverse topological order, so every
    // successor's component has a smaller id than its predecessors'
    c.scc_of_.assign(n, -1);
    {
        std::vector<int> low(n, 0), num(n, -1);
        std::vector<int> stack;
        std::vector<bool> on_stack(n, false);
        int counter = 0;
        int scc_count = 0;
        std::function<void(int)> dfs = [&](int v) {
            auto vu = static_cast<size_t>(v);
            num[vu] = low[vu] = counter++;
            stack.push_back(v);
            on_stack[vu] = true;
            for (int w : succ[vu]) {
                auto wu = static_cast<size_t>(w);
                if (num[wu] < 0) {
                    dfs(w);
                    low[vu] = std::min(low[vu], low[wu]);
                } else if (on_stack[wu]) {
                    low[vu] = std::min(low[vu], num[wu]);
                }
            }
            if (low[vu] == num[vu]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = false;
                    c.scc_of_[static_cast<size_t>(w)] = scc_count;
                    if (w == v) break;
                }
                ++scc_count;
            }
        };
        for (size_t v = 0; v < n; ++v)
            if (num[v] < 0) dfs(static_cast<int>(v));

        // condensation edges + reachability + depth, in increasing scc id
        // (successors first)
        auto sccs = static_cast<size_t>(scc_count);
        std::vector<std::set<int>> cond(sccs);
        for (size_t v = 0; v < n; ++v)
            for (int w : succ[v]) {
                int sv = c.scc_of_[v], sw = c.scc_of_[static_cast<size_t>(w)];
                if (sv != sw) cond[static_cast<size_t>(sv)].insert(sw);
            }
        size_t words = Bitset::words(sccs);
        c.scc_reach_.assign(sccs, std::vector<uint64_t>(words, 0));
        c.scc_depth_.assign(sccs, 1);
        for (size_t s = 0; s < sccs; ++s) {
            Bitset::set(c.scc_reach_[s], s);
            for (int t : cond[s]) {
                Bitset::unite(c.scc_reach_[s], c.scc_reach_[static_cast<size_t>(t)]);
                c.scc_depth_[s] =
                    std::max(c.scc_depth_[s], c.scc_depth_[static_cast<size_t>(t)] + 1);
            }
        }
    }

    // explicit assertions projected to canonical pairs, both directions
    for (const auto& a : o.property_assertions) {
        int s = c.canon_index_[c.representative_[a.subject]];
        int t = c.canon_index_[c.representative_[a.object]];
        c.asserted_[{s, t}].insert(a.property);
        c.asserted_[{t, s}].insert(a.property);
    }
    for (const auto& [iri, p] : o.object_properties) c.properties_.push_back(p);
    return c;
}

OntologyClosure build_closure(const Ontology& o) { return OntologyClosure::build(o); }

void OntologyClosure::require_class(const std::string& iri) const {
    if (!source_->has_class(iri))
        throw std::invalid_argument("undeclared class IRI: " + iri);
}

const std::string& OntologyClosure::representative(const std::string& cls) const {
    require_class(cls);
    return representative_.at(cls);
}

int OntologyClosure::canon_of(const std::string& cls) const {
    return canon_index_.at(representative_.at(cls));
}

bool OntologyClosure::reach_canon(int a, int b) const {
    int sa = scc_of_[static_cast<size_t>(a)];
    int sb = scc_of_[static_cast<size_t>(b)];
    return Bitset::test(scc_reach_[static_cast<size_t>(sa)], static_cast<size_t>(sb));
}

bool OntologyClosure::equivalent(const std::string& a, const std::string& b) const {
    require_class(a);
    require_class(b);
    return representative_.at(a) == representative_.at(b);
}

bool OntologyClosure::reachable(const std::string& sub, const std::string& super) const {
    require_class(sub);
    require_class(super);
    return reach_canon(canon_of(sub), canon_of(super));
}

std::set<std::string> OntologyClosure::related_properties(const std::string& a,
                                                          const std::string& b) const {
    require_class(a);
    require_class(b);
    std::set<std::string> out;
    int ca = canon_of(a);
    int cb = canon_of(b);
    auto it = asserted_.find({ca, cb});
    if (it != asserted_.end()) out = it->second;
    for (const auto& p : properties_) {
        if (!p.domain || !p.range) continue;
        int cd = canon_of(*p.domain);
        int cr = canon_of(*p.range);
        bool forward = reach_canon(ca, cd) && reach_canon(cb, cr);
        bool backward = reach_canon(cb, cd) && reach_canon(ca, cr);
        if (forward || backward) out.insert(p.iri);
    }
    return out;
}

int OntologyClosure::depth(const std::string& cls) const {
    require_class(cls);
    return scc_depth_[static_cast<size_t>(scc_of_[static_cast<size_t>(canon_of(cls))])];
}

int OntologyClosure::deepest_common_ancestor_depth(const std::string& a,
                                                   const std::string& b) const {
    require_class(a);
    require_class(b);
    const auto& ra = scc_reach_[static_cast<size_t>(scc_of_[static_cast<size_t>(canon_of(a))])];
    const auto& rb = scc_reach_[static_cast<size_t>(scc_of_[static_cast<size_t>(canon_of(b))])];
    int best = 0;  // synthetic root
    for (size_t w = 0; w < ra.size(); ++w) {
        uint64_t common = ra[w] & rb[w];
        while (common != 0) {
            auto bit = static_cast<size_t>(__builtin_ctzll(common));
            common &= common - 1;
            best = std::max(best, scc_depth_[w * 64 + bit]);
        }
    }
    return best;
}

// shortest explanation path over raw subclass + equivalence axioms
std::string OntologyClosure::explain_reach(const std::string& sub,
                                           const std::string& super) const {
    if (representative_.at(sub) == representative_.at(super) && sub == super)
        return sub + " reaches itself (reflexive)";
    const Ontology& o = *source_;
    std::map<std::string, std::pair<std::string, std::string>> via;  // node -> (prev, edge text)
    std::deque<std::string> frontier{sub};
    via[sub] = {"", ""};
    while (!frontier.empty()) {
        std::string cur = frontier.front();
        frontier.pop_front();
        if (cur == super) break;
        auto try_edge = [&](const std::string& next, const std::string& text) {
            if (via.count(next)) return;
            via[next] = {cur, text};
            frontier.push_back(next);
        };
        for (const auto& [x, y] : o.subclass_axioms)
            if (x == cur) try_edge(y, x + " rdfs:subClassOf " + y);
        for (const auto& [x, y] : o.equivalence_axioms) {
            if (x == cur) try_edge(y, x + " owl:equivalentClass " + y);
            if (y == cur) try_edge(x, y + " owl:equivalentClass " + x);
        }
    }
    if (!via.count(super)) return "";
    std::vector<std::string> steps;
    for (std::string cur = super; cur != sub; cur = via[cur].first)
        steps.push_back(via[cur].second);
    std::reverse(steps.begin(), steps.end());
    std::string out;
    for (const auto& s : steps) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

QueryAnswer OntologyClosure::query(QueryKind kind, const std::string& a,
                                   const std::string& b) const {
    require_class(a);
    require_class(b);
    QueryAnswer ans;
    switch (kind) {
        case QueryKind::EQUIVALENT: {
            ans.holds = equivalent(a, b);
            if (ans.holds)
                ans.justification = a == b ? a + " is the same class (reflexive)"
                                           : explain_reach(a, b);
            break;
        }
        case QueryKind::SUBCLASS: {
            ans.holds = reachable(a, b) && !equivalent(a, b);
            if (ans.holds) ans.justification = explain_reach(a, b);
            break;
        }
        case QueryKind::SUPERCLASS: {
            ans.holds = reachable(b, a) && !equivalent(a, b);
            if (ans.holds) ans.justification = explain_reach(b, a);
            break;
        }
        case QueryKind::RELATED: {
            auto props = related_properties(a, b);
            ans.holds = !props.empty();
            if (ans.holds) {
                std::string names;
                for (const auto& p : props) {
                    if (!names.empty()) names += ", ";
                    names += p;
                }
                ans.justification = "related through object propert" +
                                    std::string(props.size() == 1 ? "y " : "ies ") + names;
            }
            break;
        }
    }
    return ans;
}

}  // namespace linksift::ontology

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace linksift::ontology {

struct Property {
    std::string iri;
    std::optional<std::string> domain;
    std::optional<std::string> range;
};

struct Assertion {
    std::string subject;
    std::string property;
    std::string object;

    auto operator<=>(const Assertion&) const = default;
};

struct Ontology {
    std::set<std::string> classes;
    std::map<std::string, std::string> labels;  // class IRI -> human label
    std::set<std::pair<std::string, std::string>> subclass_axioms;   // (sub, super)
    std::set<std::pair<std::string, std::string>> equivalence_axioms;  // stored ordered
    std::map<std::string, Property> object_properties;
    std::set<Assertion> property_assertions;

    bool has_class(const std::string& iri) const { return classes.count(iri) != 0; }
};

// Snapshot format: one statement per line, three tab-separated fields.
// Throws std::runtime_error with a line number on malformed input, unknown
// predicates, dangling IRIs or self-subclass axioms.
Ontology load_ontology(const std::string& path);
Ontology parse_ontology(const std::string& content, const std::string& source_name);

enum class QueryKind { EQUIVALENT, SUBCLASS, SUPERCLASS, RELATED };

QueryKind query_kind_from_string(const std::string& name);

struct QueryAnswer {
    bool holds = false;
    std::string justification;
};

class OntologyClosure {
  public:
    static OntologyClosure build(const Ontology& o);

    // canonical representative of the equivalence component
    const std::string& representative(const std::string& cls) const;

    bool equivalent(const std::string& a, const std::string& b) const;

    // reflexive-transitive subclass reachability through equivalences
    bool reachable(const std::string& sub, const std::string& super) const;

    // property IRIs justifying relatedness between the two classes, in
    // either direction (explicit assertions modulo equivalence, plus
    // domain/range coverage)
    std::set<std::string> related_properties(const std::string& a, const std::string& b) const;

    QueryAnswer query(QueryKind kind, const std::string& a, const std::string& b) const;

    // depth on the canonical subclass DAG under a synthetic root (depth 0);
    // every declared class has depth >= 1. Longest path from the root.
    int depth(const std::string& cls) const;

    // deepest common ancestor depth of the two classes (0 when only the
    // synthetic root is shared)
    int deepest_common_ancestor_depth(const std::string& a, const std::string& b) const;

    const Ontology& source() const { return *source_; }

    // throws std::invalid_argument when the IRI was never declared
    void require_class(const std::string& iri) const;

  private:
    const Ontology* source_ = nullptr;

    std::vector<std::string> canon_order_;             // canonical node index -> IRI
    std::map<std::string, int> canon_index_;           // class IRI -> canonical node
    std::map<std::string, std::string> representative_;

    // SCC condensation of the canonical subclass digraph
    std::vector<int> scc_of_;                          // canonical node -> scc id
    std::vector<std::vector<uint64_t>> scc_reach_;     // scc id -> reachable scc bitset
    std::vector<int> scc_depth_;                       // longest path from synthetic root

    // explicit assertions projected onto canonical pairs (both directions)
    std::map<std::pair<int, int>, std::set<std::string>> asserted_;

    std::vector<Property> properties_;

    int canon_of(const std::string& cls) const;
    bool reach_canon(int a, int b) const;
    std::string explain_reach(const std::string& sub, const std::string& super) const;
};

OntologyClosure build_closure(const Ontology& o);

}  // namespace linksift::ontology

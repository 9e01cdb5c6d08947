#pragma once

// Brute-force reference oracle for ontology queries. Kept deliberately
// independent of OntologyClosure: equivalence components by fixpoint axiom
// application, reachability by exhaustive graph search over raw axioms,
// relatedness by direct definition scans.

#include "linksift/ontology.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

class OntologyOracle {
  public:
    explicit OntologyOracle(const linksift::ontology::Ontology& o) : o_(o) {
        // equivalence components: repeatedly merge sets joined by an axiom
        for (const auto& c : o.classes) component_[c] = c;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : o.equivalence_axioms) {
                std::string ra = component_[a];
                std::string rb = component_[b];
                if (ra == rb) continue;
                std::string keep = std::min(ra, rb);
                for (auto& [_, rep] : component_)
                    if (rep == ra || rep == rb) rep = keep;
                changed = true;
            }
        }
    }

    bool equivalent(const std::string& a, const std::string& b) const {
        return component_.at(a) == component_.at(b);
    }

    // path existence over subclass edges plus free equivalence hops
    bool reachable(const std::string& from, const std::string& to) const {
        std::set<std::string> seen{from};
        std::vector<std::string> frontier{from};
        while (!frontier.empty()) {
            std::string cur = frontier.back();
            frontier.pop_back();
            if (equivalent(cur, to)) return true;
            for (const auto& [sub, super] : o_.subclass_axioms)
                if (equivalent(sub, cur) && seen.insert(super).second)
                    frontier.push_back(super);
        }
        return false;
    }

    std::set<std::string> related_properties(const std::string& a, const std::string& b) const {
        std::set<std::string> props;
        for (const auto& assertion : o_.property_assertions) {
            bool forward = equivalent(assertion.subject, a) && equivalent(assertion.object, b);
            bool backward = equivalent(assertion.subject, b) && equivalent(assertion.object, a);
            if (forward || backward) props.insert(assertion.property);
        }
        for (const auto& [iri, p] : o_.object_properties) {
            if (!p.domain || !p.range) continue;
            bool forward = reachable(a, *p.domain) && reachable(b, *p.range);
            bool backward = reachable(b, *p.domain) && reachable(a, *p.range);
            if (forward || backward) props.insert(iri);
        }
        return props;
    }

    bool related(const std::string& a, const std::string& b) const {
        return !related_properties(a, b).empty();
    }

    // the usefulness rule, straight from its definition
    bool useful(const std::string& source, const std::string& target) const {
        return equivalent(source, target) || reachable(source, target) ||
               reachable(target, source) || related(source, target);
    }

    bool query(linksift::ontology::QueryKind kind, const std::string& a,
               const std::string& b) const {
        using linksift::ontology::QueryKind;
        switch (kind) {
            case QueryKind::EQUIVALENT: return equivalent(a, b);
            case QueryKind::SUBCLASS: return reachable(a, b) && !equivalent(a, b);
            case QueryKind::SUPERCLASS: return reachable(b, a) && !equivalent(a, b);
            case QueryKind::RELATED: return related(a, b);
        }
        return false;
    }

  private:
    const linksift::ontology::Ontology& o_;
    std::map<std::string, std::string> component_;
};

}  // namespace testsupport

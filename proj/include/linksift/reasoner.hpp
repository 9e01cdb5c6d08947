#pragma once

#include "linksift/matcher.hpp"
#include "linksift/ontology.hpp"

#include <map>
#include <string>
#include <vector>

namespace linksift::reasoner {

enum class PropertyKind { EQUIVALENT_CLASS, SUBCLASS_OF, HAS_SUPERCLASS, OBJECT_PROPERTY, NONE };

const char* property_kind_name(PropertyKind k);

struct InferredProperty {
    PropertyKind kind = PropertyKind::NONE;
    std::string property_iri;  // OBJECT_PROPERTY only

    // "OBJECT_PROPERTY(<iri>)" or the bare kind name
    std::string to_string() const;
};

struct Classification {
    std::string label;  // "USEFUL" | "NOISY"
    InferredProperty inferred;
    std::string justification;
};

struct ClassifiedRecord {
    std::string subject;
    std::string object;
    InferredProperty inferred_property;
    std::string reasoner_label;
    std::string user_label;
    std::string source_domain;
    std::string link_id;
};

struct PropertyBreakdown {
    std::map<std::string, long> counts;  // kind name -> count
    long total = 0;

    std::map<std::string, double> fractions() const;
};

// Usefulness rule, evaluated in fixed priority order: EQUIVALENT_CLASS,
// SUBCLASS_OF, HAS_SUPERCLASS, then OBJECT_PROPERTY; no property -> NOISY.
Classification classify_link(const ontology::OntologyClosure& closure,
                             const std::string& source, const std::string& target);

std::pair<std::vector<ClassifiedRecord>, PropertyBreakdown> classify_dataset(
    const std::vector<matcher::ConceptRecord>& records,
    const ontology::OntologyClosure& closure);

}  // namespace linksift::reasoner

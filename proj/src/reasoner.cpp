#include "linksift/reasoner.hpp"

namespace linksift::reasoner {

const char* property_kind_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::EQUIVALENT_CLASS: return "EQUIVALENT_CLASS";
        case PropertyKind::SUBCLASS_OF: return "SUBCLASS_OF";
        case PropertyKind::HAS_SUPERCLASS: return "HAS_SUPERCLASS";
        case PropertyKind::OBJECT_PROPERTY: return "OBJECT_PROPERTY";
        case PropertyKind::NONE: return "NONE";
    }
    return "?";
}

std::string InferredProperty::to_string() const {
    if (kind == PropertyKind::OBJECT_PROPERTY)
        return std::string("OBJECT_PROPERTY(") + property_iri + ")";
    return property_kind_name(kind);
}

Classification classify_link(const ontology::OntologyClosure& closure,
                             const std::string& source, const std::string& target) {
    closure.require_class(source);
    closure.require_class(target);

    Classification out;
    auto eq = closure.query(ontology::QueryKind::EQUIVALENT, source, target);
    if (eq.holds) {
        out.label = "USEFUL";
        out.inferred.kind = PropertyKind::EQUIVALENT_CLASS;
        out.justification = eq.justification;
        return out;
    }
    auto sub = closure.query(ontology::QueryKind::SUBCLASS, source, target);
    if (sub.holds) {
        out.label = "USEFUL";
        out.inferred.kind = PropertyKind::SUBCLASS_OF;
        out.justification = sub.justification;
        return out;
    }
    auto super = closure.query(ontology::QueryKind::SUPERCLASS, source, target);
    if (super.holds) {
        out.label = "USEFUL";
        out.inferred.kind = PropertyKind::HAS_SUPERCLASS;
        out.justification = super.justification;
        return out;
    }
    auto props = closure.related_properties(source, target);
    if (!props.empty()) {
        out.label = "USEFUL";
        out.inferred.kind = PropertyKind::OBJECT_PROPERTY;
        out.inferred.property_iri = *props.begin();  // deterministic: smallest IRI
        out.justification = "related through object property " + out.inferred.property_iri;
        return out;
    }
    out.label = "NOISY";
    out.inferred.kind = PropertyKind::NONE;
    return out;
}

std::pair<std::vector<ClassifiedRecord>, PropertyBreakdown> classify_dataset(
    const std::vector<matcher::ConceptRecord>& records,
    const ontology::OntologyClosure& closure) {
    std::vector<ClassifiedRecord> out;
    out.reserve(records.size());
    PropertyBreakdown breakdown;
    for (auto k : {PropertyKind::EQUIVALENT_CLASS, PropertyKind::SUBCLASS_OF,
                   PropertyKind::HAS_SUPERCLASS, PropertyKind::OBJECT_PROPERTY,
                   PropertyKind::NONE})
        breakdown.counts[property_kind_name(k)] = 0;

    for (const auto& rec : records) {
        Classification c = classify_link(closure, rec.source_class, rec.target_class);
        ClassifiedRecord row;
        row.subject = rec.source_class;
        row.object = rec.target_class;
        row.inferred_property = c.inferred;
        row.reasoner_label = c.label;
        row.user_label = rec.user_label;
        row.source_domain = rec.source_domain;
        row.link_id = rec.link_id;
        ++breakdown.counts[property_kind_name(c.inferred.kind)];
        out.push_back(std::move(row));
    }
    breakdown.total = static_cast<long>(records.size());
    return {std::move(out), breakdown};
}

std::map<std::string, double> PropertyBreakdown::fractions() const {
    std::map<std::string, double> out;
    for (const auto& [k, n] : counts)
        out[k] = total == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(total);
    return out;
}

}  // namespace linksift::reasoner

#pragma once

#include "linksift/crawl.hpp"
#include "linksift/matcher.hpp"
#include "linksift/ontology.hpp"
#include "linksift/topics.hpp"

#include <random>
#include <string>
#include <vector>

namespace linksift::synth {

// All generators draw from a raw mt19937 stream (no std distributions), so
// output is identical across standard libraries for a given seed.

// Random ontology within the given limits: classes C00.., labels on a subset,
// subclass/equivalence axioms, object properties with optional domain/range,
// class-level assertions. Never emits a self-subclass axiom.
ontology::Ontology random_ontology(unsigned seed, int max_classes = 50, int max_axioms = 120);

// Tree-shaped taxonomy plus properties and assertions; used for benchmarks.
ontology::Ontology bench_ontology(unsigned seed, int num_classes = 240);

// Concept records over the given ontology's classes, labels alternating.
std::vector<matcher::ConceptRecord> bench_concept_records(const ontology::Ontology& o,
                                                          long count, unsigned seed);

// Corpus with per-label disjoint vocabularies ("l<i>w<k>" tokens).
std::vector<topics::LabeledDocument> disjoint_corpus(int num_labels, int docs_per_label,
                                                     int tokens_per_doc, unsigned seed);

// Shared vocabulary, labels assigned uniformly at random (chance-level).
std::vector<topics::LabeledDocument> random_label_corpus(int num_labels, int docs,
                                                         int vocab_size, int tokens_per_doc,
                                                         unsigned seed);

// Probe documents for coverage tests: `classifiable` docs drawn from one of
// the disjoint-corpus label vocabularies, `unclassifiable` docs entirely
// out-of-vocabulary.
std::vector<topics::LabeledDocument> coverage_probe_docs(int num_labels, long classifiable,
                                                         long unclassifiable,
                                                         int tokens_per_doc, unsigned seed);

// Topic strings for matcher-coverage tests: `good` are existing class labels
// of `o`, `garbage` are consonant strings that match nothing.
std::vector<std::string> planted_match_topics(const ontology::Ontology& o, long good,
                                              long garbage, unsigned seed);

// Random link lists mixing clean links, media targets, bad schemes, empty
// anchors, self-fragments and duplicates.
std::vector<crawl::RawHyperlink> random_links(long count, unsigned seed);

// Exactly `removable` of the `total` links violate a filter rule (media or
// duplicate), the rest are clean.
std::vector<crawl::RawHyperlink> planted_filter_links(long total, long removable,
                                                      unsigned seed);

}  // namespace linksift::synth

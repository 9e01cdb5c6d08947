#include "linksift/synth.hpp"

#include <algorithm>

namespace linksift::synth {

namespace {

// uniform in [0, n); modulo bias is irrelevant for test data
size_t pick(std::mt19937& rng, size_t n) { return rng() % n; }

std::string class_name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "C%02d", i);
    return buf;
}

}  // namespace

ontology::Ontology random_ontology(unsigned seed, int max_classes, int max_axioms) {
    std::mt19937 rng(seed);
    ontology::Ontology o;

    int n_classes = 2 + static_cast<int>(pick(rng, static_cast<size_t>(max_classes - 1)));
    std::vector<std::string> names;
    for (int i = 0; i < n_classes; ++i) {
        names.push_back(class_name(i));
        o.classes.insert(names.back());
        if (pick(rng, 2) == 0) o.labels[names.back()] = "class " + std::to_string(i);
    }

    int n_props = static_cast<int>(pick(rng, 5));
    std::vector<std::string> props;
    for (int i = 0; i < n_props; ++i) {
        std::string p = "p" + std::to_string(i);
        ontology::Property prop{p, {}, {}};
        if (pick(rng, 2) == 0) prop.domain = names[pick(rng, names.size())];
        if (pick(rng, 2) == 0) prop.range = names[pick(rng, names.size())];
        o.object_properties.emplace(p, std::move(prop));
        props.push_back(p);
    }

    int n_axioms = static_cast<int>(pick(rng, static_cast<size_t>(max_axioms + 1)));
    for (int i = 0; i < n_axioms; ++i) {
        switch (pick(rng, props.empty() ? 2 : 3)) {
            case 0: {  // subclass
                const std::string& a = names[pick(rng, names.size())];
                const std::string& b = names[pick(rng, names.size())];
                if (a != b) o.subclass_axioms.emplace(a, b);
                break;
            }
            case 1: {  // equivalence
                const std::string& a = names[pick(rng, names.size())];
                const std::string& b = names[pick(rng, names.size())];
                if (a != b) o.equivalence_axioms.emplace(std::min(a, b), std::max(a, b));
                break;
            }
            default: {  // assertion
                o.property_assertions.insert({names[pick(rng, names.size())],
                                              props[pick(rng, props.size())],
                                              names[pick(rng, names.size())]});
                break;
            }
        }
    }
    return o;
}

ontology::Ontology bench_ontology(unsigned seed, int num_classes) {
    std::mt19937 rng(seed);
    ontology::Ontology o;
    std::vector<std::string> names;
    for (int i = 0; i < num_classes; ++i) {
        names.push_back(class_name(i));
        o.classes.insert(names.back());
        o.labels[names.back()] = "concept " + std::to_string(i);
        if (i > 0) {
            // parent chosen among earlier classes: acyclic taxonomy
            const std::string& parent = names[pick(rng, static_cast<size_t>(i))];
            o.subclass_axioms.emplace(names.back(), parent);
        }
    }
    for (int i = 0; i + 1 < num_classes; i += 37)
        o.equivalence_axioms.emplace(std::min(names[static_cast<size_t>(i)], names[static_cast<size_t>(i + 1)]),
                                     std::max(names[static_cast<size_t>(i)], names[static_cast<size_t>(i + 1)]));
    for (int p = 0; p < 8; ++p) {
        std::string name = "p" + std::to_string(p);
        ontology::Property prop{name, names[pick(rng, names.size())],
                                names[pick(rng, names.size())]};
        o.object_properties.emplace(name, std::move(prop));
        for (int a = 0; a < 4; ++a)
            o.property_assertions.insert({names[pick(rng, names.size())], name,
                                          names[pick(rng, names.size())]});
    }
    return o;
}

std::vector<matcher::ConceptRecord> bench_concept_records(const ontology::Ontology& o,
                                                          long count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> names(o.classes.begin(), o.classes.end());
    std::vector<matcher::ConceptRecord> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        matcher::ConceptRecord rec;
        rec.source_class = names[pick(rng, names.size())];
        rec.target_class = names[pick(rng, names.size())];
        rec.user_label = pick(rng, 2) == 0 ? "USEFUL" : "NOISY";
        rec.source_domain = "domain" + std::to_string(pick(rng, 12)) + ".example";
        rec.link_id = "bench-" + std::to_string(i);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<topics::LabeledDocument> disjoint_corpus(int num_labels, int docs_per_label,
                                                     int tokens_per_doc, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<topics::LabeledDocument> corpus;
    constexpr int kVocabPerLabel = 20;
    for (int l = 0; l < num_labels; ++l) {
        for (int d = 0; d < docs_per_label; ++d) {
            topics::LabeledDocument doc;
            doc.doc_id = "doc-" + std::to_string(l) + "-" + std::to_string(d);
            doc.topic_label = "label" + std::to_string(l);
            for (int t = 0; t < tokens_per_doc; ++t)
                doc.tokens.push_back("l" + std::to_string(l) + "w" +
                                     std::to_string(pick(rng, kVocabPerLabel)));
            corpus.push_back(std::move(doc));
        }
    }
    return corpus;
}

std::vector<topics::LabeledDocument> random_label_corpus(int num_labels, int docs,
                                                         int vocab_size, int tokens_per_doc,
                                                         unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<topics::LabeledDocument> corpus;
    corpus.reserve(static_cast<size_t>(docs));
    for (int d = 0; d < docs; ++d) {
        topics::LabeledDocument doc;
        doc.doc_id = "rand-" + std::to_string(d);
        doc.topic_label = "label" + std::to_string(pick(rng, static_cast<size_t>(num_labels)));
        for (int t = 0; t < tokens_per_doc; ++t)
            doc.tokens.push_back("w" + std::to_string(pick(rng, static_cast<size_t>(vocab_size))));
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

std::vector<topics::LabeledDocument> coverage_probe_docs(int num_labels, long classifiable,
                                                         long unclassifiable,
                                                         int tokens_per_doc, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<topics::LabeledDocument> docs;
    constexpr int kVocabPerLabel = 20;
    for (long i = 0; i < classifiable; ++i) {
        topics::LabeledDocument doc;
        doc.doc_id = "probe-in-" + std::to_string(i);
        int l = static_cast<int>(pick(rng, static_cast<size_t>(num_labels)));
        doc.topic_label = "label" + std::to_string(l);
        for (int t = 0; t < tokens_per_doc; ++t)
            doc.tokens.push_back("l" + std::to_string(l) + "w" +
                                 std::to_string(pick(rng, kVocabPerLabel)));
        docs.push_back(std::move(doc));
    }
    for (long i = 0; i < unclassifiable; ++i) {
        topics::LabeledDocument doc;
        doc.doc_id = "probe-out-" + std::to_string(i);
        doc.topic_label = "";
        for (int t = 0; t < tokens_per_doc; ++t)
            doc.tokens.push_back("oov" + std::to_string(i) + "x" + std::to_string(t));
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<std::string> planted_match_topics(const ontology::Ontology& o, long good,
                                              long garbage, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> labels;
    for (const auto& iri : o.classes) labels.push_back(matcher::class_label(o, iri));
    std::vector<std::string> topics;
    topics.reserve(static_cast<size_t>(good + garbage));
    for (long i = 0; i < good; ++i) topics.push_back(labels[pick(rng, labels.size())]);
    static constexpr char consonants[] = "bcdfghjklmnpqrstvwxz";
    for (long i = 0; i < garbage; ++i) {
        std::string junk;
        size_t len = 10 + pick(rng, 5);
        for (size_t k = 0; k < len; ++k) junk += consonants[pick(rng, sizeof(consonants) - 1)];
        topics.push_back(std::move(junk));
    }
    // interleave deterministically
    for (size_t i = topics.size(); i > 1; --i) std::swap(topics[i - 1], topics[rng() % i]);
    return topics;
}

std::vector<crawl::RawHyperlink> random_links(long count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<crawl::RawHyperlink> links;
    links.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        crawl::RawHyperlink link;
        std::string site = "http://s" + std::to_string(pick(rng, 6)) + ".example";
        link.source_url = site + "/page" + std::to_string(pick(rng, 8));
        link.source_domain = "s" + std::to_string(pick(rng, 6)) + ".example";
        link.position_index = static_cast<int>(pick(rng, 20));
        switch (pick(rng, 8)) {
            case 0:
                link.target_url = site + "/music" + std::to_string(pick(rng, 9)) + ".mp3";
                link.anchor_text = "song";
                break;
            case 1:
                link.target_url = "mailto:someone@example.org";
                link.anchor_text = "mail";
                break;
            case 2:
                link.target_url = site + "/page" + std::to_string(pick(rng, 8));
                link.anchor_text = "   ";  // collapses to empty
                break;
            case 3:
                link.target_url = link.source_url;  // self
                link.anchor_text = "top";
                break;
            default:
                link.target_url = site + "/t" + std::to_string(pick(rng, 40));
                link.anchor_text = "anchor " + std::to_string(pick(rng, 25));
                break;
        }
        link.paragraph_text = "paragraph " + std::to_string(i);
        links.push_back(std::move(link));
        // occasionally duplicate the previous link verbatim
        if (pick(rng, 7) == 0) links.push_back(links.back());
    }
    links.resize(static_cast<size_t>(count));
    return links;
}

std::vector<crawl::RawHyperlink> planted_filter_links(long total, long removable,
                                                      unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<crawl::RawHyperlink> links;
    long clean = total - removable;
    for (long i = 0; i < clean; ++i) {
        crawl::RawHyperlink link;
        link.source_url = "http://site" + std::to_string(i % 10) + ".example/p" +
                          std::to_string(i);
        link.target_url = "http://site" + std::to_string((i + 1) % 10) + ".example/q" +
                          std::to_string(i);
        link.anchor_text = "clean anchor " + std::to_string(i);
        link.paragraph_text = "context";
        link.source_domain = "site" + std::to_string(i % 10) + ".example";
        link.position_index = static_cast<int>(i % 50);
        links.push_back(std::move(link));
    }
    for (long i = 0; i < removable; ++i) {
        if (i % 2 == 0 || clean == 0) {  // media target
            crawl::RawHyperlink link;
            link.source_url = "http://media.example/p" + std::to_string(i);
            link.target_url = "http://media.example/file" + std::to_string(i) + ".mp3";
            link.anchor_text = "media " + std::to_string(i);
            link.paragraph_text = "context";
            link.source_domain = "media.example";
            link.position_index = 0;
            links.push_back(std::move(link));
        } else {  // exact duplicate of a clean link
            links.push_back(links[pick(rng, static_cast<size_t>(clean))]);
        }
    }
    for (size_t i = links.size(); i > 1; --i) std::swap(links[i - 1], links[rng() % i]);
    return links;
}

}  // namespace linksift::synth

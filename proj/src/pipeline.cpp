#include "linksift/pipeline.hpp"

#include "linksift/eval.hpp"
#include "linksift/features.hpp"
#include "linksift/hash.hpp"
#include "linksift/linkprep.hpp"
#include "linksift/matcher.hpp"
#include "linksift/ontology.hpp"
#include "linksift/reasoner.hpp"
#include "linksift/serde.hpp"
#include "linksift/topics.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <unordered_map>

namespace fs = std::filesystem;

namespace linksift::pipeline {

namespace {

constexpr const char* kLinksRaw = "links_raw.jsonl";
constexpr const char* kPagesIndex = "pages/index.jsonl";
constexpr const char* kLinksClean = "links_clean.jsonl";
constexpr const char* kFilterReport = "filter_report.json";
constexpr const char* kFeatures = "features.jsonl";
constexpr const char* kAssignCtx = "assignments_context.jsonl";
constexpr const char* kAssignTgt = "assignments_target.jsonl";
constexpr const char* kTopics = "topics.jsonl";
constexpr const char* kTopicsReport = "topics_report.json";
constexpr const char* kConcepts = "concepts.jsonl";
constexpr const char* kMatchReport = "match_report.json";
constexpr const char* kClassified = "classified.jsonl";
constexpr const char* kBreakdown = "breakdown.json";
constexpr const char* kConfusion = "confusion.json";
constexpr const char* kMetrics = "metrics.json";
constexpr const char* kDomains = "domains.json";

void require_artifact(const std::string& workspace, const std::string& name) {
    if (!fs::exists(artifact_path(workspace, name)))
        throw DataError("missing artifact: " + name + " (expected under " + workspace + ")");
}

std::map<std::string, std::string> load_user_labels(const std::string& path) {
    std::map<std::string, std::string> labels;
    for (const auto& row : jsonl::read_file(path)) {
        std::string label = row.at("user_label").get<std::string>();
        if (label != "USEFUL" && label != "NOISY")
            throw DataError(path + ": invalid user label '" + label + "'");
        labels[row.at("link_id").get<std::string>()] = label;
    }
    return labels;
}

// snapshot store backed by pages/index.jsonl; loads page bodies on demand
class PageStore {
  public:
    explicit PageStore(const std::string& workspace) : workspace_(workspace) {
        for (const auto& row : jsonl::read_file(artifact_path(workspace, kPagesIndex)))
            files_[row.at("url").get<std::string>()] = row.at("file").get<std::string>();
    }

    bool has(const std::string& url) const { return files_.count(url) != 0; }

    const std::string& html(const std::string& url) {
        auto cached = cache_.find(url);
        if (cached != cache_.end()) return cached->second;
        auto it = files_.find(url);
        if (it == files_.end())
            throw DataError("no page snapshot for " + url);
        std::string path = artifact_path(workspace_, "pages/" + it->second);
        return cache_.emplace(url, jsonl::read_text(path)).first->second;
    }

  private:
    std::string workspace_;
    std::unordered_map<std::string, std::string> files_;
    std::unordered_map<std::string, std::string> cache_;
};

}  // namespace

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Crawl: return "crawl";
        case Stage::Linkprep: return "linkprep";
        case Stage::Features: return "features";
        case Stage::Topics: return "topics";
        case Stage::Match: return "match";
        case Stage::Reason: return "reason";
        case Stage::Eval: return "eval";
    }
    return "?";
}

Stage stage_from_string(const std::string& name) {
    for (Stage s : {Stage::Crawl, Stage::Linkprep, Stage::Features, Stage::Topics,
                    Stage::Match, Stage::Reason, Stage::Eval})
        if (name == stage_name(s)) return s;
    throw DataError("unknown stage: " + name);
}

std::string artifact_path(const std::string& workspace, const std::string& name) {
    return (fs::path(workspace) / name).string();
}

const std::vector<std::string>& manifest_artifacts() {
    static const std::vector<std::string> names = {kLinksRaw,  kPagesIndex, kLinksClean,
                                                   kFeatures,  kTopics,     kConcepts,
                                                   kClassified, kMetrics};
    return names;
}

void PipelineConfig::apply(const std::string& key, const std::string& value) {
    if (key == "workspace") workspace = value;
    else if (key == "ontology") ontology_path = value;
    else if (key == "seeds") seeds_path = value;
    else if (key == "labels") labels_path = value;
    else if (key == "model") model_path = value;
    else if (key == "stopwords") stopwords_path = value;
    else if (key == "compounds") compounds_path = value;
    else if (key == "max_pages") max_pages = std::stoi(value);
    else if (key == "max_depth") max_depth = std::stoi(value);
    else if (key == "delay_ms") delay_ms = std::stoi(value);
    else if (key == "timeout_ms") timeout_ms = std::stoi(value);
    else if (key == "user_agent") user_agent = value;
    else if (key == "alpha") match_alpha = std::stod(value);
    else if (key == "match_threshold") match_threshold = std::stod(value);
    else if (key == "confidence_threshold") confidence_threshold = std::stod(value);
    else if (key == "seed") seed = static_cast<unsigned>(std::stoul(value));
    else throw DataError("unknown config key: " + key);
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    PipelineConfig config;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DataError(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        try {
            config.apply(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
        } catch (const std::invalid_argument&) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad numeric value");
        }
    }
    return config;
}

text::NormalizationConfig normalization_for(const PipelineConfig& config) {
    text::NormalizationConfig cfg = text::NormalizationConfig::defaults();
    if (!config.stopwords_path.empty()) cfg.stopword_list = text::load_stopwords(config.stopwords_path);
    if (!config.compounds_path.empty()) cfg.compound_rules = text::load_compounds(config.compounds_path);
    return cfg;
}

void stage_crawl(const PipelineConfig& config, crawl::Fetcher* fetcher) {
    if (config.seeds_path.empty()) throw DataError("crawl requires a seeds file");
    crawl::CrawlConfig cc;
    cc.seed_urls = crawl::read_seed_file(config.seeds_path);
    cc.max_pages_per_domain = config.max_pages;
    cc.max_depth = config.max_depth;
    cc.per_host_delay_ms = config.delay_ms;
    cc.fetch_timeout_ms = config.timeout_ms;
    cc.user_agent = config.user_agent;
    try {
        cc.validate();
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }

    std::unique_ptr<crawl::Fetcher> own;
    if (fetcher == nullptr) {
        own = crawl::make_http_fetcher();
        fetcher = own.get();
    }
    crawl::CrawlResult result = crawl::crawl_all(cc, *fetcher);
    if (result.snapshots.empty())
        throw NetworkError("no page could be fetched from any seed");

    fs::create_directories(fs::path(config.workspace) / "pages");

    std::vector<jsonl::Json> raw_rows;
    for (const auto& link : result.links) raw_rows.push_back(serde::to_json(link));
    jsonl::write_file(artifact_path(config.workspace, kLinksRaw), raw_rows);

    std::vector<jsonl::Json> index_rows;
    jsonl::Json fetched_at = jsonl::Json::object();
    for (const auto& snap : result.snapshots) {
        std::string file = hash::sha256_hex32(snap.html) + ".html";
        jsonl::write_text(artifact_path(config.workspace, "pages/" + file), snap.html);
        jsonl::Json row;
        row["url"] = snap.url;
        row["domain"] = snap.domain;
        row["fetch_status"] = snap.fetch_status;
        row["file"] = file;
        index_rows.push_back(std::move(row));
        fetched_at[snap.url] = snap.fetched_at;
    }
    jsonl::write_file(artifact_path(config.workspace, kPagesIndex), index_rows);

    std::vector<jsonl::Json> failure_rows;
    for (const auto& f : result.failures)
        failure_rows.push_back({{"url", f.url}, {"error", f.error}});
    jsonl::write_file(artifact_path(config.workspace, "pages/failures.jsonl"), failure_rows);

    // timestamps live here so the hashed artifacts stay reproducible
    jsonl::Json meta;
    meta["snapshots"] = result.snapshots.size();
    meta["links"] = result.links.size();
    meta["failures"] = result.failures.size();
    meta["skipped_anchors"] = result.skipped_anchors;
    meta["fetched_at"] = fetched_at;
    jsonl::write_json(artifact_path(config.workspace, "crawl_meta.json"), meta);
}

void stage_linkprep(const PipelineConfig& config) {
    require_artifact(config.workspace, kLinksRaw);
    std::vector<crawl::RawHyperlink> links;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kLinksRaw)))
        links.push_back(serde::raw_link_from_json(row));

    auto result = linkprep::filter_links(links);
    std::vector<jsonl::Json> rows;
    for (const auto& link : result.kept) rows.push_back(serde::to_json(link));
    jsonl::write_file(artifact_path(config.workspace, kLinksClean), rows);
    jsonl::write_json(artifact_path(config.workspace, kFilterReport),
                      serde::to_json(result.report));
}

void stage_features(const PipelineConfig& config) {
    require_artifact(config.workspace, kLinksClean);
    require_artifact(config.workspace, kPagesIndex);
    PageStore pages(config.workspace);
    text::NormalizationConfig norm = normalization_for(config);

    std::vector<features::FeatureRecord> records;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kLinksClean))) {
        crawl::RawHyperlink link = serde::raw_link_from_json(row);
        if (!pages.has(link.source_url))
            throw DataError("page store has no snapshot for source " + link.source_url);
        std::string_view target_html;
        if (pages.has(link.target_url)) target_html = pages.html(link.target_url);
        records.push_back(
            features::build_record(link, pages.html(link.source_url), target_html, norm));
    }
    std::sort(records.begin(), records.end(),
              [](const features::FeatureRecord& a, const features::FeatureRecord& b) {
                  return a.link_id < b.link_id;
              });
    std::vector<jsonl::Json> rows;
    for (const auto& r : records) rows.push_back(serde::to_json(r));
    jsonl::write_file(artifact_path(config.workspace, kFeatures), rows);
}

void stage_topics(const PipelineConfig& config) {
    require_artifact(config.workspace, kFeatures);
    if (config.model_path.empty()) throw DataError("topics stage requires a model file");
    if (config.labels_path.empty()) throw DataError("topics stage requires a labels file");
    if (!fs::exists(config.model_path))
        throw DataError("missing model file: " + config.model_path);
    if (!fs::exists(config.labels_path))
        throw DataError("missing labels file: " + config.labels_path);

    topics::TopicModel model = topics::TopicModel::from_json(jsonl::read_json(config.model_path));
    if (config.confidence_threshold >= 0) model.confidence_threshold = config.confidence_threshold;

    std::map<std::string, topics::TopicAssignment> ctx, tgt;
    std::map<std::string, std::string> domains;
    std::vector<jsonl::Json> ctx_rows, tgt_rows;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kFeatures))) {
        features::FeatureRecord rec = serde::feature_record_from_json(row);
        auto a_ctx = topics::predict(model, rec.context_tokens, rec.link_id);
        auto a_tgt = topics::predict(model, rec.target_tokens, rec.link_id);
        ctx_rows.push_back(serde::assignment_to_json(rec.link_id, a_ctx));
        tgt_rows.push_back(serde::assignment_to_json(rec.link_id, a_tgt));
        ctx[rec.link_id] = std::move(a_ctx);
        tgt[rec.link_id] = std::move(a_tgt);
        domains[rec.link_id] = rec.source_domain;
    }
    jsonl::write_file(artifact_path(config.workspace, kAssignCtx), ctx_rows);
    jsonl::write_file(artifact_path(config.workspace, kAssignTgt), tgt_rows);

    auto labels = load_user_labels(config.labels_path);
    std::pair<std::vector<topics::TopicRecord>, topics::IntegrateReport> integrated;
    try {
        integrated = topics::integrate(ctx, tgt, labels, domains);
    } catch (const std::runtime_error& e) {
        throw DataError(e.what());
    }
    std::vector<jsonl::Json> rows;
    for (const auto& rec : integrated.first) rows.push_back(serde::to_json(rec));
    jsonl::write_file(artifact_path(config.workspace, kTopics), rows);
    jsonl::write_json(artifact_path(config.workspace, kTopicsReport),
                      serde::to_json(integrated.second));
}

namespace {

ontology::Ontology load_ontology_checked(const PipelineConfig& config) {
    if (config.ontology_path.empty()) throw DataError("an ontology snapshot path is required");
    if (!fs::exists(config.ontology_path))
        throw DataError("missing ontology snapshot: " + config.ontology_path);
    try {
        return ontology::load_ontology(config.ontology_path);
    } catch (const std::runtime_error& e) {
        throw DataError(e.what());
    }
}

}  // namespace

void stage_match(const PipelineConfig& config) {
    require_artifact(config.workspace, kTopics);
    ontology::Ontology o = load_ontology_checked(config);
    ontology::OntologyClosure closure = ontology::build_closure(o);

    std::vector<topics::TopicRecord> records;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kTopics)))
        records.push_back(serde::topic_record_from_json(row));

    matcher::MatchConfig mc;
    mc.string_weight = config.match_alpha;
    mc.accept_threshold = config.match_threshold;
    try {
        mc.validate();
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }

    auto [concepts, report] = matcher::match_dataset(records, closure, mc);
    std::vector<jsonl::Json> rows;
    for (const auto& rec : concepts) rows.push_back(serde::to_json(rec));
    jsonl::write_file(artifact_path(config.workspace, kConcepts), rows);
    jsonl::write_json(artifact_path(config.workspace, kMatchReport), serde::to_json(report));
}

void stage_reason(const PipelineConfig& config) {
    require_artifact(config.workspace, kConcepts);
    ontology::Ontology o = load_ontology_checked(config);
    ontology::OntologyClosure closure = ontology::build_closure(o);

    std::vector<matcher::ConceptRecord> records;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kConcepts)))
        records.push_back(serde::concept_record_from_json(row));

    std::pair<std::vector<reasoner::ClassifiedRecord>, reasoner::PropertyBreakdown> out;
    try {
        out = reasoner::classify_dataset(records, closure);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    std::vector<jsonl::Json> rows;
    for (const auto& rec : out.first) rows.push_back(serde::to_json(rec));
    jsonl::write_file(artifact_path(config.workspace, kClassified), rows);
    jsonl::write_json(artifact_path(config.workspace, kBreakdown), serde::to_json(out.second));
}

void stage_eval(const PipelineConfig& config) {
    require_artifact(config.workspace, kClassified);
    std::vector<reasoner::ClassifiedRecord> records;
    for (const auto& row : jsonl::read_file(artifact_path(config.workspace, kClassified)))
        records.push_back(serde::classified_record_from_json(row));
    if (records.empty()) throw DataError("no classified records to evaluate");

    eval::ConfusionMatrix cm = eval::confusion(records);
    jsonl::write_json(artifact_path(config.workspace, kConfusion), eval::confusion_to_json(cm));
    jsonl::write_json(artifact_path(config.workspace, kMetrics),
                      eval::metrics_to_json(eval::metrics(cm)));
    jsonl::write_json(artifact_path(config.workspace, kDomains),
                      eval::domain_report(records).to_json());
}

jsonl::Json Manifest::to_json() const {
    jsonl::Json doc;
    jsonl::Json arts = jsonl::Json::object();
    for (const auto& [name, digest] : artifacts) arts[name] = digest;
    doc["artifacts"] = arts;
    return doc;
}

Manifest run(const PipelineConfig& config, std::optional<Stage> from, crawl::Fetcher* fetcher) {
    if (config.workspace.empty()) throw DataError("a workspace directory is required");
    fs::create_directories(config.workspace);

    static const std::vector<Stage> order = {Stage::Crawl, Stage::Linkprep, Stage::Features,
                                             Stage::Topics, Stage::Match, Stage::Reason,
                                             Stage::Eval};
    Stage first = from.value_or(Stage::Crawl);

    for (Stage s : order) {
        if (static_cast<int>(s) < static_cast<int>(first)) continue;
        switch (s) {
            case Stage::Crawl: stage_crawl(config, fetcher); break;
            case Stage::Linkprep: stage_linkprep(config); break;
            case Stage::Features: stage_features(config); break;
            case Stage::Topics: stage_topics(config); break;
            case Stage::Match: stage_match(config); break;
            case Stage::Reason: stage_reason(config); break;
            case Stage::Eval: stage_eval(config); break;
        }
    }

    Manifest manifest;
    for (const auto& name : manifest_artifacts()) {
        require_artifact(config.workspace, name);
        manifest.artifacts.emplace_back(
            name, hash::sha256_file_hex(artifact_path(config.workspace, name)));
    }
    jsonl::write_json(artifact_path(config.workspace, "manifest.json"), manifest.to_json());
    return manifest;
}

}  // namespace linksift::pipeline

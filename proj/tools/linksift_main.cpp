// linksift: staged pipeline for separating useful from noisy hyperlinks
// using an ontology-backed reasoner.

#include "linksift/crawl.hpp"
#include "linksift/eval.hpp"
#include "linksift/features.hpp"
#include "linksift/jsonl.hpp"
#include "linksift/linkprep.hpp"
#include "linksift/matcher.hpp"
#include "linksift/ontology.hpp"
#include "linksift/pipeline.hpp"
#include "linksift/reasoner.hpp"
#include "linksift/serde.hpp"
#include "linksift/synth.hpp"
#include "linksift/topics.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace linksift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNetwork = 3;

std::vector<topics::LabeledDocument> read_corpus(const std::string& path) {
    std::vector<topics::LabeledDocument> corpus;
    for (const auto& row : jsonl::read_file(path)) {
        topics::LabeledDocument doc;
        doc.doc_id = row.at("doc_id").get<std::string>();
        doc.tokens = row.at("tokens").get<std::vector<std::string>>();
        doc.topic_label = row.at("topic_label").get<std::string>();
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

std::vector<features::FeatureRecord> read_features(const std::string& path) {
    std::vector<features::FeatureRecord> records;
    for (const auto& row : jsonl::read_file(path))
        records.push_back(serde::feature_record_from_json(row));
    return records;
}

std::vector<long> parse_sizes(const std::string& csv) {
    std::vector<long> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        sizes.push_back(std::stol(item));
    }
    return sizes;
}

// --- subcommand bodies (throw pipeline::DataError / NetworkError) ---------

struct CrawlArgs {
    std::string seeds, out;
    int max_pages = 100, max_depth = 5, delay_ms = 200, timeout_ms = 10000;
    std::string user_agent = "linksift/0.1";
};

void run_crawl(const CrawlArgs& args) {
    pipeline::PipelineConfig config;
    config.workspace = args.out;
    config.seeds_path = args.seeds;
    config.max_pages = args.max_pages;
    config.max_depth = args.max_depth;
    config.delay_ms = args.delay_ms;
    config.timeout_ms = args.timeout_ms;
    config.user_agent = args.user_agent;
    fs::create_directories(args.out);
    pipeline::stage_crawl(config);
    std::cout << "crawl complete: " << pipeline::artifact_path(args.out, "links_raw.jsonl")
              << "\n";
}

void run_linkprep(const std::string& in, const std::string& out, const std::string& report) {
    std::vector<crawl::RawHyperlink> links;
    for (const auto& row : jsonl::read_file(in)) links.push_back(serde::raw_link_from_json(row));
    auto result = linkprep::filter_links(links);
    std::vector<jsonl::Json> rows;
    for (const auto& link : result.kept) rows.push_back(serde::to_json(link));
    jsonl::write_file(out, rows);
    jsonl::write_json(report, serde::to_json(result.report));
    std::cout << "kept " << result.report.kept_count << " of " << result.report.input_count
              << " links\n";
}

void run_features(const std::string& links, const std::string& pages, const std::string& out,
                  const std::string& stopwords, const std::string& compounds) {
    pipeline::PipelineConfig config;
    config.workspace = fs::path(pages).parent_path().string();
    config.stopwords_path = stopwords;
    config.compounds_path = compounds;
    // reuse the stage with explicit locations
    text::NormalizationConfig norm = pipeline::normalization_for(config);

    std::map<std::string, std::string> page_files;
    for (const auto& row : jsonl::read_file((fs::path(pages) / "index.jsonl").string()))
        page_files[row.at("url").get<std::string>()] = row.at("file").get<std::string>();
    auto html_of = [&](const std::string& url) -> std::string {
        auto it = page_files.find(url);
        if (it == page_files.end()) return "";
        return jsonl::read_text((fs::path(pages) / it->second).string());
    };

    std::vector<features::FeatureRecord> records;
    for (const auto& row : jsonl::read_file(links)) {
        crawl::RawHyperlink link = serde::raw_link_from_json(row);
        std::string source_html = html_of(link.source_url);
        if (source_html.empty() && page_files.find(link.source_url) == page_files.end())
            throw pipeline::DataError("no page snapshot for source " + link.source_url);
        records.push_back(
            features::build_record(link, source_html, html_of(link.target_url), norm));
    }
    std::sort(records.begin(), records.end(),
              [](const auto& a, const auto& b) { return a.link_id < b.link_id; });
    std::vector<jsonl::Json> rows;
    for (const auto& r : records) rows.push_back(serde::to_json(r));
    jsonl::write_file(out, rows);
    std::cout << "extracted features for " << records.size() << " links\n";
}

struct TrainArgs {
    std::string corpus, algo = "maxent", out, summary;
    double split = 0.8;
    int folds = 10;
    unsigned seed = 42;
    double threshold = 0.5;
    bool compare = false;
};

void run_train(const TrainArgs& args) {
    auto corpus = read_corpus(args.corpus);
    if (args.compare) {
        jsonl::Json report = jsonl::Json::array();
        for (auto algo : {topics::Algorithm::NAIVE_BAYES, topics::Algorithm::MAX_ENTROPY}) {
            auto [model, summary] = topics::train(corpus, algo, args.split, args.folds, args.seed);
            report.push_back(summary.to_json());
            std::cout << summary.to_json().dump() << "\n";
        }
        if (!args.summary.empty()) jsonl::write_json(args.summary, report);
        return;
    }
    auto [model, summary] =
        topics::train(corpus, topics::algorithm_from_string(args.algo), args.split, args.folds,
                      args.seed);
    model.confidence_threshold = args.threshold;
    if (!args.out.empty()) jsonl::write_json(args.out, model.to_json());
    if (!args.summary.empty()) jsonl::write_json(args.summary, summary.to_json());
    std::cout << summary.to_json().dump() << "\n";
}

void run_predict(const std::string& model_path, const std::string& features_path,
                 const std::string& side, const std::string& out) {
    topics::TopicModel model = topics::TopicModel::from_json(jsonl::read_json(model_path));
    bool context = side == "context";
    if (!context && side != "target")
        throw pipeline::DataError("--side must be 'context' or 'target'");
    std::vector<jsonl::Json> rows;
    for (const auto& rec : read_features(features_path)) {
        auto a = topics::predict(model, context ? rec.context_tokens : rec.target_tokens,
                                 rec.link_id);
        rows.push_back(serde::assignment_to_json(rec.link_id, a));
    }
    jsonl::write_file(out, rows);
    std::cout << "predicted " << rows.size() << " " << side << " assignments\n";
}

void run_integrate(const std::string& ctx_path, const std::string& tgt_path,
                   const std::string& labels_path, const std::string& links_path,
                   const std::string& out, const std::string& report_path) {
    std::map<std::string, topics::TopicAssignment> ctx, tgt;
    for (const auto& row : jsonl::read_file(ctx_path)) {
        auto [id, a] = serde::assignment_from_json(row);
        ctx[id] = a;
    }
    for (const auto& row : jsonl::read_file(tgt_path)) {
        auto [id, a] = serde::assignment_from_json(row);
        tgt[id] = a;
    }
    std::map<std::string, std::string> labels;
    for (const auto& row : jsonl::read_file(labels_path))
        labels[row.at("link_id").get<std::string>()] = row.at("user_label").get<std::string>();
    std::map<std::string, std::string> domains;
    for (const auto& rec : read_features(links_path)) domains[rec.link_id] = rec.source_domain;

    auto [records, report] = topics::integrate(ctx, tgt, labels, domains);
    std::vector<jsonl::Json> rows;
    for (const auto& rec : records) rows.push_back(serde::to_json(rec));
    jsonl::write_file(out, rows);
    if (!report_path.empty()) jsonl::write_json(report_path, serde::to_json(report));
    std::cout << "integrated " << report.emitted << " of " << report.total << " links\n";
}

void run_label(const std::string& links_path, const std::string& out,
               const std::string& from_file, bool interactive) {
    // canonical link order from the feature records
    std::vector<std::pair<std::string, std::string>> links;  // (link_id, display)
    for (const auto& rec : read_features(links_path))
        links.emplace_back(rec.link_id, rec.context.anchor_text);

    std::map<std::string, std::string> labels;
    if (fs::exists(out))
        for (const auto& row : jsonl::read_file(out))
            labels[row.at("link_id").get<std::string>()] =
                row.at("user_label").get<std::string>();

    std::vector<std::pair<std::string, std::string>> unlabeled;
    for (const auto& [id, display] : links)
        if (!labels.count(id)) unlabeled.emplace_back(id, display);

    if (!from_file.empty()) {
        std::ifstream in(from_file);
        if (!in) throw pipeline::DataError("cannot open judgments file: " + from_file);
        std::string line;
        size_t lineno = 0;
        size_t applied = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            auto judgment = topics::parse_judgment(line);
            if (!judgment)
                throw pipeline::DataError(from_file + ":" + std::to_string(lineno) +
                                          ": unknown judgment '" + line + "'");
            if (applied >= unlabeled.size())
                throw pipeline::DataError(from_file + ":" + std::to_string(lineno) +
                                          ": more judgments than unlabeled links");
            labels[unlabeled[applied].first] = *judgment;
            ++applied;
        }
        if (applied < unlabeled.size())
            throw pipeline::DataError(from_file + ": " +
                                      std::to_string(unlabeled.size() - applied) +
                                      " links remain unlabeled");
    } else if (interactive) {
        for (const auto& [id, display] : unlabeled) {
            while (true) {
                std::cout << id << "  anchor: \"" << display << "\"  (u)seful/(n)oisy? "
                          << std::flush;
                std::string answer;
                if (!std::getline(std::cin, answer)) {
                    std::cout << "\nstopping; progress saved\n";
                    goto done;
                }
                auto judgment = topics::parse_judgment(answer);
                if (judgment) {
                    labels[id] = *judgment;
                    break;
                }
                std::cout << "unrecognized; enter u, n, useful, noisy, 0 or 1\n";
            }
        }
    } else {
        throw pipeline::DataError("label requires --from <file> or --interactive");
    }
done:
    std::vector<jsonl::Json> rows;
    for (const auto& [id, label] : labels) rows.push_back(serde::label_to_json(id, label));
    jsonl::write_file(out, rows);
    std::cout << labels.size() << " of " << links.size() << " links labeled\n";
}

void run_match(const std::string& topics_path, const std::string& ontology_path, double alpha,
               double threshold, const std::string& out, const std::string& report_path) {
    ontology::Ontology o = ontology::load_ontology(ontology_path);
    ontology::OntologyClosure closure = ontology::build_closure(o);
    std::vector<topics::TopicRecord> records;
    for (const auto& row : jsonl::read_file(topics_path))
        records.push_back(serde::topic_record_from_json(row));
    matcher::MatchConfig mc;
    mc.string_weight = alpha;
    mc.accept_threshold = threshold;
    auto [concepts, report] = matcher::match_dataset(records, closure, mc);
    std::vector<jsonl::Json> rows;
    for (const auto& rec : concepts) rows.push_back(serde::to_json(rec));
    jsonl::write_file(out, rows);
    if (!report_path.empty()) jsonl::write_json(report_path, serde::to_json(report));
    std::cout << "matched " << report.matched << " of " << report.total << " records ("
              << report.matched_pct() << "%)\n";
}

void run_ontology_validate(const std::string& path) {
    ontology::Ontology o = ontology::load_ontology(path);
    std::cout << "classes: " << o.classes.size() << "\n"
              << "labels: " << o.labels.size() << "\n"
              << "subclass_axioms: " << o.subclass_axioms.size() << "\n"
              << "equivalence_axioms: " << o.equivalence_axioms.size() << "\n"
              << "object_properties: " << o.object_properties.size() << "\n"
              << "property_assertions: " << o.property_assertions.size() << "\n";
}

void run_ontology_query(const std::string& path, const std::string& kind, const std::string& a,
                        const std::string& b) {
    ontology::Ontology o = ontology::load_ontology(path);
    ontology::OntologyClosure closure = ontology::build_closure(o);
    auto answer = closure.query(ontology::query_kind_from_string(kind), a, b);
    std::cout << (answer.holds ? "true" : "false") << "\n";
    if (answer.holds && !answer.justification.empty())
        std::cout << "justification: " << answer.justification << "\n";
}

void run_reason(const std::string& concepts_path, const std::string& ontology_path,
                const std::string& out, const std::string& breakdown_path) {
    ontology::Ontology o = ontology::load_ontology(ontology_path);
    ontology::OntologyClosure closure = ontology::build_closure(o);
    std::vector<matcher::ConceptRecord> records;
    for (const auto& row : jsonl::read_file(concepts_path))
        records.push_back(serde::concept_record_from_json(row));
    auto [classified, breakdown] = reasoner::classify_dataset(records, closure);
    std::vector<jsonl::Json> rows;
    for (const auto& rec : classified) rows.push_back(serde::to_json(rec));
    jsonl::write_file(out, rows);
    if (!breakdown_path.empty()) jsonl::write_json(breakdown_path, serde::to_json(breakdown));
    std::cout << "classified " << classified.size() << " records\n";
}

struct EvalArgs {
    std::string classified, out_dir = ".";
    std::string bench_sizes;
    std::string bench_scope = "reasoner";
    std::string bench_out = "bench.csv";
    int runs = 5;
    unsigned seed = 42;
    // FULL scope inputs
    std::string features_path, model_path, ontology_path;
};

void run_full_bench_body(long size, const std::vector<features::FeatureRecord>& records,
                         const topics::TopicModel& model,
                         const ontology::OntologyClosure& closure) {
    if (size > static_cast<long>(records.size()))
        throw pipeline::DataError("bench size " + std::to_string(size) +
                                  " exceeds available data (" +
                                  std::to_string(records.size()) + " records)");
    std::map<std::string, topics::TopicAssignment> ctx, tgt;
    std::map<std::string, std::string> labels, domains;
    for (long i = 0; i < size; ++i) {
        const auto& rec = records[static_cast<size_t>(i)];
        ctx[rec.link_id] = topics::predict(model, rec.context_tokens, rec.link_id);
        tgt[rec.link_id] = topics::predict(model, rec.target_tokens, rec.link_id);
        labels[rec.link_id] = "USEFUL";  // timing only
        domains[rec.link_id] = rec.source_domain;
    }
    auto [topic_records, integrate_report] = topics::integrate(ctx, tgt, labels, domains);
    matcher::MatchConfig mc;
    auto [concepts, match_report] = matcher::match_dataset(topic_records, closure, mc);
    (void)integrate_report;
    (void)match_report;
    reasoner::classify_dataset(concepts, closure);
}

void run_eval(const EvalArgs& args) {
    std::vector<reasoner::ClassifiedRecord> records;
    for (const auto& row : jsonl::read_file(args.classified))
        records.push_back(serde::classified_record_from_json(row));
    if (records.empty()) throw pipeline::DataError("no classified records to evaluate");

    fs::create_directories(args.out_dir);
    auto path = [&](const char* name) { return (fs::path(args.out_dir) / name).string(); };

    eval::ConfusionMatrix cm = eval::confusion(records);
    eval::MetricsReport mr = eval::metrics(cm);
    jsonl::write_json(path("confusion.json"), eval::confusion_to_json(cm));
    jsonl::write_json(path("metrics.json"), eval::metrics_to_json(mr));
    jsonl::write_json(path("domains.json"), eval::domain_report(records).to_json());
    std::cout << eval::metrics_to_json(mr).dump() << "\n";

    if (args.bench_sizes.empty()) return;
    auto sizes = parse_sizes(args.bench_sizes);
    eval::BenchResult result;
    if (args.bench_scope == "reasoner") {
        ontology::Ontology o = synth::bench_ontology(args.seed);
        ontology::OntologyClosure closure = ontology::build_closure(o);
        std::map<long, std::vector<matcher::ConceptRecord>> datasets;
        for (long s : sizes) datasets[s] = synth::bench_concept_records(o, s, args.seed + 1);
        result = eval::bench(sizes, eval::BenchScope::REASONER_ONLY, args.runs,
                             [&](long size) { reasoner::classify_dataset(datasets[size], closure); });
    } else if (args.bench_scope == "full") {
        if (args.features_path.empty() || args.model_path.empty() || args.ontology_path.empty())
            throw pipeline::DataError(
                "full-scope bench requires --features, --model and --ontology");
        auto feature_records = read_features(args.features_path);
        topics::TopicModel model =
            topics::TopicModel::from_json(jsonl::read_json(args.model_path));
        ontology::Ontology o = ontology::load_ontology(args.ontology_path);
        ontology::OntologyClosure closure = ontology::build_closure(o);
        result = eval::bench(sizes, eval::BenchScope::FULL, args.runs, [&](long size) {
            run_full_bench_body(size, feature_records, model, closure);
        });
    } else {
        throw pipeline::DataError("--bench-scope must be 'reasoner' or 'full'");
    }
    jsonl::write_text(path(args.bench_out.c_str()), result.to_csv());
    std::cout << "bench: linear coefficient " << result.linear_coefficient
              << " ms/record, R^2 " << result.r_squared << "\n";
}

struct RunArgs {
    std::string config_path;
    std::string from_stage;
    std::vector<std::string> overrides;  // key=value
};

void run_pipeline(RunArgs& args) {
    pipeline::PipelineConfig config;
    if (!args.config_path.empty()) config = pipeline::PipelineConfig::from_file(args.config_path);

    // environment variable, then explicit flags, override the file
    if (const char* ws = std::getenv("LINKSIFT_WORKSPACE"); ws != nullptr && *ws != '\0')
        config.workspace = ws;
    for (const auto& kv : args.overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw pipeline::DataError("override must be key=value: " + kv);
        config.apply(kv.substr(0, eq), kv.substr(eq + 1));
    }

    std::optional<pipeline::Stage> from;
    if (!args.from_stage.empty()) from = pipeline::stage_from_string(args.from_stage);

    pipeline::Manifest manifest = pipeline::run(config, from);
    std::cout << manifest.to_json().dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic and relatedness noisy-hyperlink removal pipeline"};
    app.require_subcommand(1);

    // crawl
    CrawlArgs crawl_args;
    auto* cmd_crawl = app.add_subcommand("crawl", "crawl seed domains breadth-first");
    cmd_crawl->add_option("--seeds", crawl_args.seeds, "seed URL file")->required();
    cmd_crawl->add_option("--out", crawl_args.out, "output workspace directory")->required();
    cmd_crawl->add_option("--max-pages", crawl_args.max_pages, "page budget per domain");
    cmd_crawl->add_option("--max-depth", crawl_args.max_depth, "traversal depth limit");
    cmd_crawl->add_option("--delay-ms", crawl_args.delay_ms, "per-host politeness delay");
    cmd_crawl->add_option("--timeout-ms", crawl_args.timeout_ms, "fetch timeout");
    cmd_crawl->add_option("--user-agent", crawl_args.user_agent, "user agent string");

    // linkprep
    std::string lp_in, lp_out, lp_report;
    auto* cmd_linkprep = app.add_subcommand("linkprep", "remove media/duplicate/degenerate links");
    cmd_linkprep->add_option("--in", lp_in)->required();
    cmd_linkprep->add_option("--out", lp_out)->required();
    cmd_linkprep->add_option("--report", lp_report)->required();

    // features
    std::string ft_links, ft_pages, ft_out, ft_stopwords, ft_compounds;
    auto* cmd_features = app.add_subcommand("features", "extract and normalize feature text");
    cmd_features->add_option("--links", ft_links)->required();
    cmd_features->add_option("--pages", ft_pages)->required();
    cmd_features->add_option("--out", ft_out)->required();
    cmd_features->add_option("--stopwords", ft_stopwords);
    cmd_features->add_option("--compounds", ft_compounds);

    // topics
    auto* cmd_topics = app.add_subcommand("topics", "topic classifier operations");
    cmd_topics->require_subcommand(1);

    TrainArgs train_args;
    auto* cmd_train = cmd_topics->add_subcommand("train", "train a topic classifier");
    cmd_train->add_option("--corpus", train_args.corpus)->required();
    cmd_train->add_option("--algo", train_args.algo, "maxent|nb");
    cmd_train->add_option("--split", train_args.split);
    cmd_train->add_option("--folds", train_args.folds);
    cmd_train->add_option("--seed", train_args.seed);
    cmd_train->add_option("--threshold", train_args.threshold, "confidence threshold");
    cmd_train->add_option("--out", train_args.out, "model output path");
    cmd_train->add_option("--summary", train_args.summary, "evaluation summary path");
    cmd_train->add_flag("--compare", train_args.compare, "run both algorithms");

    std::string pr_model, pr_features, pr_side = "context", pr_out;
    auto* cmd_predict = cmd_topics->add_subcommand("predict", "assign topics");
    cmd_predict->add_option("--model", pr_model)->required();
    cmd_predict->add_option("--features", pr_features)->required();
    cmd_predict->add_option("--side", pr_side, "context|target");
    cmd_predict->add_option("--out", pr_out)->required();

    std::string in_ctx, in_tgt, in_labels, in_links, in_out, in_report;
    auto* cmd_integrate = cmd_topics->add_subcommand("integrate", "join assignments and labels");
    cmd_integrate->add_option("--context", in_ctx)->required();
    cmd_integrate->add_option("--target", in_tgt)->required();
    cmd_integrate->add_option("--labels", in_labels)->required();
    cmd_integrate->add_option("--links", in_links, "features.jsonl for domains")->required();
    cmd_integrate->add_option("--out", in_out)->required();
    cmd_integrate->add_option("--report", in_report);

    std::string lb_links, lb_out, lb_from;
    bool lb_interactive = false;
    auto* cmd_label = cmd_topics->add_subcommand("label", "record user judgments");
    cmd_label->add_option("--links", lb_links, "features.jsonl")->required();
    cmd_label->add_option("--out", lb_out)->required();
    cmd_label->add_option("--from", lb_from, "judgments file");
    cmd_label->add_flag("--interactive", lb_interactive);

    // match
    std::string mt_topics, mt_ontology, mt_out, mt_report;
    double mt_alpha = 0.5, mt_threshold = 0.7;
    auto* cmd_match = app.add_subcommand("match", "map topics to ontology classes");
    cmd_match->add_option("--topics", mt_topics)->required();
    cmd_match->add_option("--ontology", mt_ontology)->required();
    cmd_match->add_option("--alpha", mt_alpha, "string similarity weight");
    cmd_match->add_option("--threshold", mt_threshold, "accept threshold");
    cmd_match->add_option("--out", mt_out)->required();
    cmd_match->add_option("--report", mt_report);

    // ontology
    auto* cmd_ontology = app.add_subcommand("ontology", "ontology snapshot utilities");
    cmd_ontology->require_subcommand(1);
    std::string ov_file;
    auto* cmd_validate = cmd_ontology->add_subcommand("validate", "validate a snapshot");
    cmd_validate->add_option("file", ov_file)->required();
    std::string oq_file, oq_kind, oq_a, oq_b;
    auto* cmd_query = cmd_ontology->add_subcommand("query", "query the closure");
    cmd_query->add_option("file", oq_file)->required();
    cmd_query->add_option("kind", oq_kind, "EQUIVALENT|SUBCLASS|SUPERCLASS|RELATED")->required();
    cmd_query->add_option("a", oq_a)->required();
    cmd_query->add_option("b", oq_b)->required();

    // reason
    std::string rs_concepts, rs_ontology, rs_out, rs_breakdown;
    auto* cmd_reason = app.add_subcommand("reason", "apply the usefulness rule");
    cmd_reason->add_option("--concepts", rs_concepts)->required();
    cmd_reason->add_option("--ontology", rs_ontology)->required();
    cmd_reason->add_option("--out", rs_out)->required();
    cmd_reason->add_option("--breakdown", rs_breakdown);

    // eval
    EvalArgs eval_args;
    auto* cmd_eval = app.add_subcommand("eval", "confusion matrix, metrics and reports");
    cmd_eval->add_option("--classified", eval_args.classified)->required();
    cmd_eval->add_option("--out-dir", eval_args.out_dir);
    cmd_eval->add_option("--bench", eval_args.bench_sizes, "comma-separated sizes");
    cmd_eval->add_option("--bench-scope", eval_args.bench_scope, "reasoner|full");
    cmd_eval->add_option("--bench-out", eval_args.bench_out);
    cmd_eval->add_option("--runs", eval_args.runs, "timed runs per size");
    cmd_eval->add_option("--seed", eval_args.seed);
    cmd_eval->add_option("--features", eval_args.features_path, "full-scope bench input");
    cmd_eval->add_option("--model", eval_args.model_path, "full-scope bench input");
    cmd_eval->add_option("--ontology", eval_args.ontology_path, "full-scope bench input");

    // run
    RunArgs run_args;
    std::string run_workspace, run_seeds, run_ontology, run_model, run_labels;
    auto* cmd_run = app.add_subcommand("run", "execute the full pipeline");
    cmd_run->add_option("--config", run_args.config_path, "flat key=value config file");
    cmd_run->add_option("--from", run_args.from_stage, "resume from stage");
    cmd_run->add_option("--set", run_args.overrides, "config override key=value")->take_all();
    cmd_run->add_option("--workspace", run_workspace, "workspace directory");
    cmd_run->add_option("--seeds", run_seeds, "seed URL file");
    cmd_run->add_option("--ontology", run_ontology, "ontology snapshot");
    cmd_run->add_option("--model", run_model, "topic model");
    cmd_run->add_option("--labels", run_labels, "user labels file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_crawl->parsed()) run_crawl(crawl_args);
        else if (cmd_linkprep->parsed()) run_linkprep(lp_in, lp_out, lp_report);
        else if (cmd_features->parsed())
            run_features(ft_links, ft_pages, ft_out, ft_stopwords, ft_compounds);
        else if (cmd_train->parsed()) run_train(train_args);
        else if (cmd_predict->parsed()) run_predict(pr_model, pr_features, pr_side, pr_out);
        else if (cmd_integrate->parsed())
            run_integrate(in_ctx, in_tgt, in_labels, in_links, in_out, in_report);
        else if (cmd_label->parsed()) run_label(lb_links, lb_out, lb_from, lb_interactive);
        else if (cmd_match->parsed())
            run_match(mt_topics, mt_ontology, mt_alpha, mt_threshold, mt_out, mt_report);
        else if (cmd_validate->parsed()) run_ontology_validate(ov_file);
        else if (cmd_query->parsed()) run_ontology_query(oq_file, oq_kind, oq_a, oq_b);
        else if (cmd_reason->parsed()) run_reason(rs_concepts, rs_ontology, rs_out, rs_breakdown);
        else if (cmd_eval->parsed()) run_eval(eval_args);
        else if (cmd_run->parsed()) {
            // explicit flags win over --set pairs and the config file
            if (!run_workspace.empty()) run_args.overrides.push_back("workspace=" + run_workspace);
            if (!run_seeds.empty()) run_args.overrides.push_back("seeds=" + run_seeds);
            if (!run_ontology.empty()) run_args.overrides.push_back("ontology=" + run_ontology);
            if (!run_model.empty()) run_args.overrides.push_back("model=" + run_model);
            if (!run_labels.empty()) run_args.overrides.push_back("labels=" + run_labels);
            run_pipeline(run_args);
        }
    } catch (const pipeline::NetworkError& e) {
        std::cerr << "network error: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const pipeline::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}

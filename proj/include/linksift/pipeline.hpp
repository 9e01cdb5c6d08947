#pragma once

#include "linksift/crawl.hpp"
#include "linksift/jsonl.hpp"
#include "linksift/text.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linksift::pipeline {

// input/validation problems -> exit code 2
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// every seed unreachable -> exit code 3
struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Stage { Crawl, Linkprep, Features, Topics, Match, Reason, Eval };

const char* stage_name(Stage s);
Stage stage_from_string(const std::string& name);

struct PipelineConfig {
    std::string workspace;
    std::string ontology_path;
    std::string seeds_path;
    std::string labels_path;
    std::string model_path;
    std::string stopwords_path;  // empty: bundled defaults
    std::string compounds_path;  // empty: bundled defaults

    int max_pages = 100;
    int max_depth = 5;
    int delay_ms = 200;
    int timeout_ms = 10000;
    std::string user_agent = "linksift/0.1";

    double match_alpha = 0.5;
    double match_threshold = 0.7;
    double confidence_threshold = -1;  // < 0: keep the model's threshold
    unsigned seed = 42;

    // flat key=value file, '#' comments; unknown keys are errors
    static PipelineConfig from_file(const std::string& path);
    void apply(const std::string& key, const std::string& value);
};

struct Manifest {
    // artifact name (workspace-relative) -> sha256 of file contents
    std::vector<std::pair<std::string, std::string>> artifacts;

    jsonl::Json to_json() const;
};

// The eight pipeline artifacts recorded in the manifest, in stage order.
const std::vector<std::string>& manifest_artifacts();

std::string artifact_path(const std::string& workspace, const std::string& name);

text::NormalizationConfig normalization_for(const PipelineConfig& config);

// Individual stages; each reads only the previous stage's artifacts from the
// workspace and writes its own. `fetcher` (crawl only) defaults to the HTTP
// fetcher when null.
void stage_crawl(const PipelineConfig& config, crawl::Fetcher* fetcher = nullptr);
void stage_linkprep(const PipelineConfig& config);
void stage_features(const PipelineConfig& config);
void stage_topics(const PipelineConfig& config);
void stage_match(const PipelineConfig& config);
void stage_reason(const PipelineConfig& config);
void stage_eval(const PipelineConfig& config);

// Runs stages from `from` (default: crawl) through eval, then writes
// manifest.json. Resuming verifies the upstream artifacts and raises
// DataError naming the first missing one.
Manifest run(const PipelineConfig& config, std::optional<Stage> from = {},
             crawl::Fetcher* fetcher = nullptr);

}  // namespace linksift::pipeline

#pragma once

#include "linksift/jsonl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linksift::topics {

inline constexpr const char* kUnclassified = "UNCLASSIFIED";

enum class Algorithm { MAX_ENTROPY, NAIVE_BAYES };

Algorithm algorithm_from_string(const std::string& name);  // "maxent" | "nb" (or full names)
const char* algorithm_name(Algorithm a);

struct LabeledDocument {
    std::string doc_id;
    std::vector<std::string> tokens;
    std::string topic_label;
};

struct MaxEntParams {
    double l2_strength = 0.1;
    double learning_rate = 0.1;
    int max_iterations = 500;
    double gradient_tolerance = 1e-6;
};

struct TopicModel {
    Algorithm algorithm = Algorithm::MAX_ENTROPY;
    std::vector<std::string> vocabulary;   // ordered
    std::vector<std::string> topic_labels; // ordered
    double confidence_threshold = 0.5;

    // MAX_ENTROPY: one row per label over vocabulary + bias (last column).
    std::vector<std::vector<double>> weights;

    // NAIVE_BAYES: log priors per label; log likelihoods per label x token.
    std::vector<double> log_priors;
    std::vector<std::vector<double>> log_likelihoods;

    jsonl::Json to_json() const;
    static TopicModel from_json(const jsonl::Json& doc);
};

struct EvaluationSummary {
    std::string algorithm;
    double train_accuracy = 0;
    double heldout_accuracy = 0;
    std::vector<double> fold_accuracies;
    double cv_mean_accuracy = 0;
    long train_millis = 0;

    jsonl::Json to_json() const;
};

struct TopicAssignment {
    std::string doc_id;
    std::string topic;  // kUnclassified below the confidence threshold
    double confidence = 0;
};

struct TopicRecord {
    std::string context_topic;
    std::string target_topic;
    std::string user_label;  // "USEFUL" | "NOISY"
    std::string source_domain;
    std::string link_id;
};

struct IntegrateReport {
    long total = 0;
    long emitted = 0;
    long excluded_context = 0;
    long excluded_target = 0;
    long excluded_both = 0;

    double coverage_pct() const { return total == 0 ? 0.0 : 100.0 * emitted / total; }
};

// Trains on the full corpus after measuring a single held-out split and
// k-fold cross-validation accuracies. Deterministic given `seed`.
// Throws std::invalid_argument on an empty corpus, fewer than two distinct
// labels, corpus smaller than `folds`, or empty training documents.
std::pair<TopicModel, EvaluationSummary> train(const std::vector<LabeledDocument>& corpus,
                                               Algorithm algorithm, double split, int folds,
                                               unsigned seed,
                                               const MaxEntParams& params = {});

// Posterior of the argmax label; below-threshold, empty and all-OOV inputs
// yield kUnclassified (the latter two with confidence 0).
TopicAssignment predict(const TopicModel& model, const std::vector<std::string>& tokens,
                        const std::string& doc_id = "");

// Per-label posterior distribution (sums to 1); empty for empty/all-OOV input.
std::vector<double> posterior(const TopicModel& model, const std::vector<std::string>& tokens);

// Joins the four per-link inputs into Fig-8-shaped records. All maps must
// share exactly the same key set; a missing key raises std::runtime_error
// naming the link id.
std::pair<std::vector<TopicRecord>, IntegrateReport> integrate(
    const std::map<std::string, TopicAssignment>& context_assignments,
    const std::map<std::string, TopicAssignment>& target_assignments,
    const std::map<std::string, std::string>& user_labels,
    const std::map<std::string, std::string>& domains);

// --- MaxEnt internals exposed for verification ---------------------------

// Dense bag-of-words training instance.
struct Instance {
    std::vector<std::pair<int, double>> counts;  // (token index, count)
    int label = 0;
};

// Mean negative log-likelihood plus (l2/2)*||W||^2 (bias unregularized).
double maxent_loss(const std::vector<std::vector<double>>& weights,
                   const std::vector<Instance>& data, int vocab_size, double l2_strength);

std::vector<std::vector<double>> maxent_gradient(const std::vector<std::vector<double>>& weights,
                                                 const std::vector<Instance>& data,
                                                 int vocab_size, double l2_strength);

// --- user labels ----------------------------------------------------------

// Parses one judgment token: USEFUL/NOISY, u/n, or the 0/1 file convention
// (0 = USEFUL, 1 = NOISY). nullopt when unrecognized.
std::optional<std::string> parse_judgment(const std::string& token);

}  // namespace linksift::topics

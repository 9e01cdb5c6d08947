#pragma once

#include "linksift/jsonl.hpp"
#include "linksift/reasoner.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace linksift::eval {

struct ConfusionMatrix {
    long tp = 0;  // user USEFUL, reasoner USEFUL
    long fp = 0;  // user NOISY,  reasoner USEFUL
    long fn = 0;  // user USEFUL, reasoner NOISY
    long tn = 0;  // user NOISY,  reasoner NOISY

    long total() const { return tp + fp + fn + tn; }
};

struct MetricsReport {
    double accuracy = 0;
    double error_rate = 0;
    double precision = 0;
    double recall = 0;
    double specificity = 0;
    double f1 = 0;
};

struct DomainCounts {
    long reasoner_useful = 0;
    long reasoner_noisy = 0;
    long user_useful = 0;
    long user_noisy = 0;
};

struct PerspectiveSummary {
    double useful_pct = 0;
    double noisy_pct = 0;
    std::vector<std::pair<std::string, long>> top_useful_domains;
    std::vector<std::pair<std::string, long>> top_noisy_domains;
    std::vector<std::pair<std::string, long>> top_noisy_target_concepts;
};

struct DomainReport {
    long total = 0;
    std::map<std::string, DomainCounts> domains;
    PerspectiveSummary reasoner;
    PerspectiveSummary user;

    jsonl::Json to_json() const;
};

ConfusionMatrix confusion(const std::vector<reasoner::ClassifiedRecord>& records);

// Six measures with the 0/0 -> 0 convention; throws std::invalid_argument
// on an empty matrix.
MetricsReport metrics(const ConfusionMatrix& m);

DomainReport domain_report(const std::vector<reasoner::ClassifiedRecord>& records, int top_k = 5);

// --- scalability benchmark ------------------------------------------------

enum class BenchScope { REASONER_ONLY, FULL };

struct BenchRow {
    long size = 0;
    std::string scope;
    int run = 0;
    double millis = 0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    std::map<long, double> median_millis;  // per size
    double linear_coefficient = 0;  // fitted millis-per-record slope
    double intercept = 0;
    double r_squared = 0;

    std::string to_csv() const;  // columns: size,scope,run,millis
};

// Times `body(size)` for each requested size. The callable must perform the
// stage under test once per invocation; runs are strictly sequential.
BenchResult bench(const std::vector<long>& sizes, BenchScope scope, int runs,
                  const std::function<void(long)>& body);

jsonl::Json metrics_to_json(const MetricsReport& m);
jsonl::Json confusion_to_json(const ConfusionMatrix& m);

}  // namespace linksift::eval

#include "linksift/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace linksift::eval {

ConfusionMatrix confusion(const std::vector<reasoner::ClassifiedRecord>& records) {
    ConfusionMatrix m;
    for (const auto& r : records) {
        bool user_useful = r.user_label == "USEFUL";
        bool reasoner_useful = r.reasoner_label == "USEFUL";
        if (user_useful && reasoner_useful) ++m.tp;
        else if (user_useful && !reasoner_useful) ++m.fn;
        else if (!user_useful && reasoner_useful) ++m.fp;
        else ++m.tn;
    }
    return m;
}

MetricsReport metrics(const ConfusionMatrix& m) {
    long total = m.total();
    if (total == 0) throw std::invalid_argument("confusion matrix is empty");
    auto ratio = [](long num, long den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    MetricsReport r;
    r.accuracy = ratio(m.tp + m.tn, total);
    r.error_rate = ratio(m.fp + m.fn, total);
    r.precision = ratio(m.tp, m.tp + m.fp);
    r.recall = ratio(m.tp, m.tp + m.fn);
    r.specificity = ratio(m.tn, m.tn + m.fp);
    r.f1 = (r.precision + r.recall) == 0.0
               ? 0.0
               : 2.0 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

namespace {

std::vector<std::pair<std::string, long>> top_k(const std::map<std::string, long>& counts,
                                                int k) {
    std::vector<std::pair<std::string, long>> rows(counts.begin(), counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<int>(rows.size()) > k) rows.resize(static_cast<size_t>(k));
    // drop zero-count tails
    while (!rows.empty() && rows.back().second == 0) rows.pop_back();
    return rows;
}

jsonl::Json pairs_to_json(const std::vector<std::pair<std::string, long>>& rows) {
    jsonl::Json arr = jsonl::Json::array();
    for (const auto& [name, count] : rows) arr.push_back({{"name", name}, {"count", count}});
    return arr;
}

jsonl::Json perspective_to_json(const PerspectiveSummary& p) {
    jsonl::Json doc;
    doc["useful_pct"] = p.useful_pct;
    doc["noisy_pct"] = p.noisy_pct;
    doc["top_useful_domains"] = pairs_to_json(p.top_useful_domains);
    doc["top_noisy_domains"] = pairs_to_json(p.top_noisy_domains);
    doc["top_noisy_target_concepts"] = pairs_to_json(p.top_noisy_target_concepts);
    return doc;
}

}  // namespace

DomainReport domain_report(const std::vector<reasoner::ClassifiedRecord>& records, int top_k_n) {
    DomainReport report;
    report.total = static_cast<long>(records.size());

    std::map<std::string, long> reasoner_useful_by_domain, reasoner_noisy_by_domain;
    std::map<std::string, long> user_useful_by_domain, user_noisy_by_domain;
    std::map<std::string, long> reasoner_noisy_targets, user_noisy_targets;
    long reasoner_useful = 0, user_useful = 0;

    for (const auto& r : records) {
        auto& d = report.domains[r.source_domain];
        bool ru = r.reasoner_label == "USEFUL";
        bool uu = r.user_label == "USEFUL";
        if (ru) {
            ++d.reasoner_useful;
            ++reasoner_useful;
            ++reasoner_useful_by_domain[r.source_domain];
        } else {
            ++d.reasoner_noisy;
            ++reasoner_noisy_by_domain[r.source_domain];
            ++reasoner_noisy_targets[r.object];
        }
        if (uu) {
            ++d.user_useful;
            ++user_useful;
            ++user_useful_by_domain[r.source_domain];
        } else {
            ++d.user_noisy;
            ++user_noisy_by_domain[r.source_domain];
            ++user_noisy_targets[r.object];
        }
    }

    auto pct = [&](long n) {
        return report.total == 0 ? 0.0
                                 : 100.0 * static_cast<double>(n) /
                                       static_cast<double>(report.total);
    };
    report.reasoner.useful_pct = pct(reasoner_useful);
    report.reasoner.noisy_pct = pct(report.total - reasoner_useful);
    report.user.useful_pct = pct(user_useful);
    report.user.noisy_pct = pct(report.total - user_useful);

    report.reasoner.top_useful_domains = top_k(reasoner_useful_by_domain, top_k_n);
    report.reasoner.top_noisy_domains = top_k(reasoner_noisy_by_domain, top_k_n);
    report.reasoner.top_noisy_target_concepts = top_k(reasoner_noisy_targets, top_k_n);
    report.user.top_useful_domains = top_k(user_useful_by_domain, top_k_n);
    report.user.top_noisy_domains = top_k(user_noisy_by_domain, top_k_n);
    report.user.top_noisy_target_concepts = top_k(user_noisy_targets, top_k_n);
    return report;
}

jsonl::Json DomainReport::to_json() const {
    jsonl::Json doc;
    doc["total"] = total;
    doc["reasoner"] = perspective_to_json(reasoner);
    doc["user"] = perspective_to_json(user);
    jsonl::Json rows = jsonl::Json::object();
    for (const auto& [domain, counts] : domains)
        rows[domain] = {{"reasoner_useful", counts.reasoner_useful},
                        {"reasoner_noisy", counts.reasoner_noisy},
                        {"user_useful", counts.user_useful},
                        {"user_noisy", counts.user_noisy}};
    doc["domains"] = rows;
    return doc;
}

BenchResult bench(const std::vector<long>& sizes, BenchScope scope, int runs,
                  const std::function<void(long)>& body) {
    if (sizes.empty()) throw std::invalid_argument("no benchmark sizes given");
    for (long s : sizes)
        if (s <= 0) throw std::invalid_argument("benchmark size must be positive");
    if (runs < 3) throw std::invalid_argument("at least 3 runs required");

    const char* scope_name = scope == BenchScope::REASONER_ONLY ? "REASONER_ONLY" : "FULL";
    BenchResult result;
    for (long size : sizes) {
        body(size);  // warm-up, untimed
        std::vector<double> samples;
        for (int run = 0; run < runs; ++run) {
            auto t0 = std::chrono::steady_clock::now();
            body(size);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            result.rows.push_back({size, scope_name, run, ms});
            samples.push_back(ms);
        }
        std::sort(samples.begin(), samples.end());
        size_t n = samples.size();
        result.median_millis[size] =
            n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
    }

    // least-squares millis = a*size + b over the medians
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(result.median_millis.size());
    for (const auto& [size, ms] : result.median_millis) {
        double x = static_cast<double>(size);
        sx += x;
        sy += ms;
        sxx += x * x;
        sxy += x * ms;
    }
    double denom = n * sxx - sx * sx;
    if (denom != 0) {
        result.linear_coefficient = (n * sxy - sx * sy) / denom;
        result.intercept = (sy - result.linear_coefficient * sx) / n;
        double ss_res = 0, ss_tot = 0;
        double mean_y = sy / n;
        for (const auto& [size, ms] : result.median_millis) {
            double fit = result.linear_coefficient * static_cast<double>(size) + result.intercept;
            ss_res += (ms - fit) * (ms - fit);
            ss_tot += (ms - mean_y) * (ms - mean_y);
        }
        result.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    }
    return result;
}

std::string BenchResult::to_csv() const {
    std::ostringstream out;
    out << "size,scope,run,millis\n";
    for (const auto& row : rows)
        out << row.size << ',' << row.scope << ',' << row.run << ',' << row.millis << '\n';
    return out.str();
}

jsonl::Json confusion_to_json(const ConfusionMatrix& m) {
    return {{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn}, {"total", m.total()}};
}

jsonl::Json metrics_to_json(const MetricsReport& m) {
    jsonl::Json doc;
    doc["accuracy"] = m.accuracy;
    doc["error_rate"] = m.error_rate;
    doc["precision"] = m.precision;
    doc["recall"] = m.recall;
    doc["specificity"] = m.specificity;
    doc["f1"] = m.f1;
    return doc;
}

}  // namespace linksift::eval

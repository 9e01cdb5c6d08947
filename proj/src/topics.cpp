#include "linksift/topics.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace linksift::topics {

namespace {

// index vocabulary and labels in first-seen order
struct Indexed {
    std::vector<std::string> vocabulary;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> token_index;
    std::unordered_map<std::string, int> label_index;
    std::vector<Instance> instances;
};

Indexed index_corpus(const std::vector<LabeledDocument>& docs) {
    Indexed ix;
    for (const auto& doc : docs) {
        auto [lit, lnew] = ix.label_index.try_emplace(
            doc.topic_label, static_cast<int>(ix.labels.size()));
        if (lnew) ix.labels.push_back(doc.topic_label);

        std::unordered_map<int, double> counts;
        for (const auto& tok : doc.tokens) {
            auto [tit, tnew] =
                ix.token_index.try_emplace(tok, static_cast<int>(ix.vocabulary.size()));
            if (tnew) ix.vocabulary.push_back(tok);
            counts[tit->second] += 1.0;
        }
        Instance inst;
        inst.label = lit->second;
        inst.counts.assign(counts.begin(), counts.end());
        std::sort(inst.counts.begin(), inst.counts.end());
        ix.instances.push_back(std::move(inst));
    }
    return ix;
}

// stable Fisher-Yates; std::shuffle's output is implementation-defined
void deterministic_shuffle(std::vector<size_t>& idx, std::mt19937& rng) {
    for (size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng() % i]);
}

std::vector<double> softmax(std::vector<double> scores) {
    double mx = *std::max_element(scores.begin(), scores.end());
    double sum = 0;
    for (double& s : scores) {
        s = std::exp(s - mx);
        sum += s;
    }
    for (double& s : scores) s /= sum;
    return scores;
}

std::vector<double> maxent_scores(const std::vector<std::vector<double>>& weights,
                                  const Instance& inst, int vocab_size) {
    std::vector<double> scores(weights.size());
    for (size_t l = 0; l < weights.size(); ++l) {
        double s = weights[l][static_cast<size_t>(vocab_size)];  // bias
        for (auto [t, c] : inst.counts) s += weights[l][static_cast<size_t>(t)] * c;
        scores[l] = s;
    }
    return scores;
}

class MaxEntTrainer {
  public:
    MaxEntTrainer(int vocab_size, int num_labels, MaxEntParams params)
        : vocab_(vocab_size), labels_(num_labels), params_(params) {}

    std::vector<std::vector<double>> fit(const std::vector<Instance>& data) const {
        std::vector<std::vector<double>> w(
            static_cast<size_t>(labels_),
            std::vector<double>(static_cast<size_t>(vocab_) + 1, 0.0));
        for (int iter = 0; iter < params_.max_iterations; ++iter) {
            auto grad = maxent_gradient(w, data, vocab_, params_.l2_strength);
            double norm2 = 0;
            for (const auto& row : grad)
                for (double g : row) norm2 += g * g;
            if (std::sqrt(norm2) < params_.gradient_tolerance) break;
            for (size_t l = 0; l < w.size(); ++l)
                for (size_t t = 0; t < w[l].size(); ++t)
                    w[l][t] -= params_.learning_rate * grad[l][t];
        }
        return w;
    }

  private:
    int vocab_;
    int labels_;
    MaxEntParams params_;
};

struct NaiveBayesFit {
    std::vector<double> log_priors;
    std::vector<std::vector<double>> log_likelihoods;
};

// multinomial NB with add-one smoothing on token counts
NaiveBayesFit fit_naive_bayes(const std::vector<Instance>& data, int vocab_size,
                              int num_labels) {
    NaiveBayesFit fit;
    std::vector<double> label_docs(static_cast<size_t>(num_labels), 0.0);
    std::vector<std::vector<double>> token_counts(
        static_cast<size_t>(num_labels), std::vector<double>(static_cast<size_t>(vocab_size), 0.0));
    std::vector<double> label_tokens(static_cast<size_t>(num_labels), 0.0);

    for (const auto& inst : data) {
        label_docs[static_cast<size_t>(inst.label)] += 1.0;
        for (auto [t, c] : inst.counts) {
            token_counts[static_cast<size_t>(inst.label)][static_cast<size_t>(t)] += c;
            label_tokens[static_cast<size_t>(inst.label)] += c;
        }
    }
    double total_docs = static_cast<double>(data.size());
    fit.log_priors.resize(static_cast<size_t>(num_labels));
    fit.log_likelihoods.assign(static_cast<size_t>(num_labels),
                               std::vector<double>(static_cast<size_t>(vocab_size), 0.0));
    for (int l = 0; l < num_labels; ++l) {
        auto lu = static_cast<size_t>(l);
        // a fold can lack a label entirely; keep the prior finite but tiny
        fit.log_priors[lu] = label_docs[lu] > 0
                                 ? std::log(label_docs[lu] / total_docs)
                                 : std::log(0.5 / (total_docs + 1.0));
        double denom = label_tokens[lu] + static_cast<double>(vocab_size);
        for (int t = 0; t < vocab_size; ++t)
            fit.log_likelihoods[lu][static_cast<size_t>(t)] =
                std::log((token_counts[lu][static_cast<size_t>(t)] + 1.0) / denom);
    }
    return fit;
}

TopicModel fit_model(Algorithm algorithm, const Indexed& ix,
                     const std::vector<Instance>& data, const MaxEntParams& params) {
    TopicModel model;
    model.algorithm = algorithm;
    model.vocabulary = ix.vocabulary;
    model.topic_labels = ix.labels;
    int vocab = static_cast<int>(ix.vocabulary.size());
    int labels = static_cast<int>(ix.labels.size());
    if (algorithm == Algorithm::MAX_ENTROPY) {
        model.weights = MaxEntTrainer(vocab, labels, params).fit(data);
    } else {
        auto fit = fit_naive_bayes(data, vocab, labels);
        model.log_priors = std::move(fit.log_priors);
        model.log_likelihoods = std::move(fit.log_likelihoods);
    }
    return model;
}

int predict_index(const TopicModel& model, const Instance& inst, double& confidence) {
    std::vector<double> scores;
    int vocab = static_cast<int>(model.vocabulary.size());
    if (model.algorithm == Algorithm::MAX_ENTROPY) {
        scores = maxent_scores(model.weights, inst, vocab);
    } else {
        scores = model.log_priors;
        for (auto [t, c] : inst.counts)
            for (size_t l = 0; l < scores.size(); ++l)
                scores[l] += model.log_likelihoods[l][static_cast<size_t>(t)] * c;
    }
    auto post = softmax(std::move(scores));
    int best = 0;
    for (size_t l = 1; l < post.size(); ++l)
        if (post[l] > post[static_cast<size_t>(best)]) best = static_cast<int>(l);
    confidence = post[static_cast<size_t>(best)];
    return best;
}

double accuracy_on(const TopicModel& model, const std::vector<Instance>& data) {
    if (data.empty()) return 0;
    long hits = 0;
    for (const auto& inst : data) {
        double conf = 0;
        if (predict_index(model, inst, conf) == inst.label) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(data.size());
}

Instance project(const TopicModel& model, const std::vector<std::string>& tokens) {
    std::unordered_map<std::string, int> index;
    index.reserve(model.vocabulary.size());
    for (size_t i = 0; i < model.vocabulary.size(); ++i)
        index[model.vocabulary[i]] = static_cast<int>(i);
    std::unordered_map<int, double> counts;
    for (const auto& tok : tokens) {
        auto it = index.find(tok);
        if (it != index.end()) counts[it->second] += 1.0;  // OOV ignored
    }
    Instance inst;
    inst.counts.assign(counts.begin(), counts.end());
    std::sort(inst.counts.begin(), inst.counts.end());
    return inst;
}

}  // namespace

Algorithm algorithm_from_string(const std::string& name) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (n == "maxent" || n == "max_entropy" || n == "max-entropy") return Algorithm::MAX_ENTROPY;
    if (n == "nb" || n == "naive_bayes" || n == "naive-bayes") return Algorithm::NAIVE_BAYES;
    throw std::invalid_argument("unknown algorithm: " + name);
}

const char* algorithm_name(Algorithm a) {
    return a == Algorithm::MAX_ENTROPY ? "MAX_ENTROPY" : "NAIVE_BAYES";
}

double maxent_loss(const std::vector<std::vector<double>>& weights,
                   const std::vector<Instance>& data, int vocab_size, double l2_strength) {
    double nll = 0;
    for (const auto& inst : data) {
        auto scores = maxent_scores(weights, inst, vocab_size);
        double mx = *std::max_element(scores.begin(), scores.end());
        double lse = 0;
        for (double s : scores) lse += std::exp(s - mx);
        lse = mx + std::log(lse);
        nll += lse - scores[static_cast<size_t>(inst.label)];
    }
    nll /= static_cast<double>(data.size());
    double reg = 0;
    for (const auto& row : weights)
        for (int t = 0; t < vocab_size; ++t) reg += row[static_cast<size_t>(t)] * row[static_cast<size_t>(t)];
    return nll + 0.5 * l2_strength * reg;
}

std::vector<std::vector<double>> maxent_gradient(const std::vector<std::vector<double>>& weights,
                                                 const std::vector<Instance>& data,
                                                 int vocab_size, double l2_strength) {
    size_t L = weights.size();
    std::vector<std::vector<double>> grad(L, std::vector<double>(static_cast<size_t>(vocab_size) + 1, 0.0));
    for (const auto& inst : data) {
        auto post = softmax(maxent_scores(weights, inst, vocab_size));
        for (size_t l = 0; l < L; ++l) {
            double coef = post[l] - (static_cast<int>(l) == inst.label ? 1.0 : 0.0);
            for (auto [t, c] : inst.counts) grad[l][static_cast<size_t>(t)] += coef * c;
            grad[l][static_cast<size_t>(vocab_size)] += coef;  // bias column
        }
    }
    double inv_n = 1.0 / static_cast<double>(data.size());
    for (size_t l = 0; l < L; ++l) {
        for (int t = 0; t <= vocab_size; ++t) grad[l][static_cast<size_t>(t)] *= inv_n;
        for (int t = 0; t < vocab_size; ++t)
            grad[l][static_cast<size_t>(t)] += l2_strength * weights[l][static_cast<size_t>(t)];
    }
    return grad;
}

std::pair<TopicModel, EvaluationSummary> train(const std::vector<LabeledDocument>& corpus,
                                               Algorithm algorithm, double split, int folds,
                                               unsigned seed, const MaxEntParams& params) {
    if (corpus.empty()) throw std::invalid_argument("training corpus is empty");
    if (folds < 2) throw std::invalid_argument("folds must be >= 2");
    if (static_cast<int>(corpus.size()) < folds)
        throw std::invalid_argument("corpus smaller than the number of folds");
    if (!(split > 0.0 && split < 1.0))
        throw std::invalid_argument("train split must lie strictly between 0 and 1");

    std::set<std::string> distinct;
    for (const auto& doc : corpus) {
        if (doc.tokens.empty())
            throw std::invalid_argument("training document has no tokens: " + doc.doc_id);
        if (doc.topic_label == kUnclassified)
            throw std::invalid_argument("topic label collides with the UNCLASSIFIED sentinel");
        distinct.insert(doc.topic_label);
    }
    if (distinct.size() < 2)
        throw std::invalid_argument("training corpus must contain at least two topic labels");

    auto started = std::chrono::steady_clock::now();
    Indexed ix = index_corpus(corpus);

    std::vector<size_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(seed);
    deterministic_shuffle(order, rng);

    auto subset = [&](size_t from, size_t to) {
        std::vector<Instance> out;
        out.reserve(to - from);
        for (size_t i = from; i < to; ++i) out.push_back(ix.instances[order[i]]);
        return out;
    };

    EvaluationSummary summary;
    summary.algorithm = algorithm_name(algorithm);

    // held-out split
    size_t n_train = static_cast<size_t>(std::lround(split * static_cast<double>(corpus.size())));
    n_train = std::clamp<size_t>(n_train, 1, corpus.size() - 1);
    {
        auto train_set = subset(0, n_train);
        auto test_set = subset(n_train, corpus.size());
        TopicModel m = fit_model(algorithm, ix, train_set, params);
        summary.heldout_accuracy = accuracy_on(m, test_set);
    }

    // k-fold cross-validation over the same shuffled order
    size_t n = corpus.size();
    for (int f = 0; f < folds; ++f) {
        size_t lo = n * static_cast<size_t>(f) / static_cast<size_t>(folds);
        size_t hi = n * static_cast<size_t>(f + 1) / static_cast<size_t>(folds);
        std::vector<Instance> train_set;
        std::vector<Instance> test_set;
        for (size_t i = 0; i < n; ++i)
            (i >= lo && i < hi ? test_set : train_set).push_back(ix.instances[order[i]]);
        TopicModel m = fit_model(algorithm, ix, train_set, params);
        summary.fold_accuracies.push_back(accuracy_on(m, test_set));
    }
    summary.cv_mean_accuracy =
        std::accumulate(summary.fold_accuracies.begin(), summary.fold_accuracies.end(), 0.0) /
        static_cast<double>(summary.fold_accuracies.size());

    // final model uses every document
    TopicModel model = fit_model(algorithm, ix, ix.instances, params);
    summary.train_accuracy = accuracy_on(model, ix.instances);
    summary.train_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    return {std::move(model), std::move(summary)};
}

std::vector<double> posterior(const TopicModel& model, const std::vector<std::string>& tokens) {
    Instance inst = project(model, tokens);
    if (inst.counts.empty()) return {};
    std::vector<double> scores;
    int vocab = static_cast<int>(model.vocabulary.size());
    if (model.algorithm == Algorithm::MAX_ENTROPY) {
        scores = maxent_scores(model.weights, inst, vocab);
    } else {
        scores = model.log_priors;
        for (auto [t, c] : inst.counts)
            for (size_t l = 0; l < scores.size(); ++l)
                scores[l] += model.log_likelihoods[l][static_cast<size_t>(t)] * c;
    }
    return softmax(std::move(scores));
}

TopicAssignment predict(const TopicModel& model, const std::vector<std::string>& tokens,
                        const std::string& doc_id) {
    TopicAssignment a;
    a.doc_id = doc_id;
    Instance inst = project(model, tokens);
    if (inst.counts.empty()) {  // empty or all-OOV input
        a.topic = kUnclassified;
        a.confidence = 0;
        return a;
    }
    double conf = 0;
    int best = predict_index(model, inst, conf);
    a.confidence = conf;
    a.topic = conf < model.confidence_threshold ? kUnclassified
                                                : model.topic_labels[static_cast<size_t>(best)];
    return a;
}

std::pair<std::vector<TopicRecord>, IntegrateReport> integrate(
    const std::map<std::string, TopicAssignment>& context_assignments,
    const std::map<std::string, TopicAssignment>& target_assignments,
    const std::map<std::string, std::string>& user_labels,
    const std::map<std::string, std::string>& domains) {
    auto require = [](const auto& m, const std::string& id, const char* what) {
        if (m.find(id) == m.end())
            throw std::runtime_error(std::string("link ") + id + " missing from " + what);
    };
    for (const auto& [id, _] : context_assignments) {
        require(target_assignments, id, "target assignments");
        require(user_labels, id, "user labels");
        require(domains, id, "domains");
    }
    for (const auto& [id, _] : target_assignments) require(context_assignments, id, "context assignments");
    for (const auto& [id, _] : user_labels) require(context_assignments, id, "context assignments");
    for (const auto& [id, _] : domains) require(context_assignments, id, "context assignments");

    std::vector<TopicRecord> records;
    IntegrateReport report;
    report.total = static_cast<long>(context_assignments.size());
    for (const auto& [id, ctx] : context_assignments) {  // std::map: sorted by link_id
        const auto& tgt = target_assignments.at(id);
        bool ctx_un = ctx.topic == kUnclassified;
        bool tgt_un = tgt.topic == kUnclassified;
        if (ctx_un && tgt_un) {
            ++report.excluded_both;
            continue;
        }
        if (ctx_un) {
            ++report.excluded_context;
            continue;
        }
        if (tgt_un) {
            ++report.excluded_target;
            continue;
        }
        TopicRecord rec;
        rec.context_topic = ctx.topic;
        rec.target_topic = tgt.topic;
        rec.user_label = user_labels.at(id);
        rec.source_domain = domains.at(id);
        rec.link_id = id;
        records.push_back(std::move(rec));
    }
    report.emitted = static_cast<long>(records.size());
    return {std::move(records), report};
}

std::optional<std::string> parse_judgment(const std::string& token) {
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "useful" || t == "u" || t == "0") return "USEFUL";
    if (t == "noisy" || t == "n" || t == "1") return "NOISY";
    return std::nullopt;
}

jsonl::Json TopicModel::to_json() const {
    jsonl::Json doc;
    doc["format_version"] = 1;
    doc["algorithm"] = algorithm_name(algorithm);
    doc["confidence_threshold"] = confidence_threshold;
    doc["vocabulary"] = vocabulary;
    doc["topic_labels"] = topic_labels;
    if (algorithm == Algorithm::MAX_ENTROPY) {
        doc["weights"] = weights;
    } else {
        doc["log_priors"] = log_priors;
        doc["log_likelihoods"] = log_likelihoods;
    }
    return doc;
}

TopicModel TopicModel::from_json(const jsonl::Json& doc) {
    TopicModel m;
    m.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
    m.confidence_threshold = doc.at("confidence_threshold").get<double>();
    m.vocabulary = doc.at("vocabulary").get<std::vector<std::string>>();
    m.topic_labels = doc.at("topic_labels").get<std::vector<std::string>>();
    size_t vocab = m.vocabulary.size();
    size_t labels = m.topic_labels.size();
    if (m.algorithm == Algorithm::MAX_ENTROPY) {
        m.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
        if (m.weights.size() != labels)
            throw std::runtime_error("model weights do not match the label count");
        for (const auto& row : m.weights)
            if (row.size() != vocab + 1)
                throw std::runtime_error("model weight row does not match vocabulary size");
    } else {
        m.log_priors = doc.at("log_priors").get<std::vector<double>>();
        m.log_likelihoods = doc.at("log_likelihoods").get<std::vector<std::vector<double>>>();
        if (m.log_priors.size() != labels || m.log_likelihoods.size() != labels)
            throw std::runtime_error("model priors do not match the label count");
        for (const auto& row : m.log_likelihoods)
            if (row.size() != vocab)
                throw std::runtime_error("model likelihood row does not match vocabulary size");
    }
    return m;
}

jsonl::Json EvaluationSummary::to_json() const {
    jsonl::Json doc;
    doc["algorithm"] = algorithm;
    doc["train_accuracy"] = train_accuracy;
    doc["heldout_accuracy"] = heldout_accuracy;
    doc["fold_accuracies"] = fold_accuracies;
    doc["cv_mean_accuracy"] = cv_mean_accuracy;
    doc["train_millis"] = train_millis;
    return doc;
}

}  // namespace linksift::topics

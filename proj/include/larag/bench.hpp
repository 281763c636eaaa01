#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "larag/embed.hpp"
#include "larag/generate.hpp"
#include "larag/prompt.hpp"
#include "larag/retrieval.hpp"

namespace larag {

struct BenchmarkCase {
    std::string query_id;
    std::string question;
    std::string reference;  // gold answer
};

struct ScoreTriple {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    static ScoreTriple from_pr(double p, double r);
};

// One (query, prompt, config) run.
struct BenchmarkRecord {
    std::string query_id;
    PromptKind prompt_kind = PromptKind::kBasic;
    std::string config_label;
    std::string answer;
    std::size_t retrieved_chunks = 0;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    long total_tokens = 0;
    double latency_seconds = 0.0;
    std::optional<ScoreTriple> scores;  // absent when the run or scoring failed
    std::size_t len_ref = 0;            // word counts
    std::size_t len_pred = 0;
    std::string error;  // empty on success
};

// Scoring/word-count tokenizer: lowercase, punctuation stripped, whitespace
// split.
std::vector<std::string> score_tokens(const std::string& text);

// Embedding-based surrogate for the usual transformer scorer: tokens of both
// texts are embedded and greedily matched by maximum cosine (clamped at 0).
// P averages over prediction tokens, R over reference tokens, F1 is their
// harmonic mean. Throws ScoringError on empty input.
ScoreTriple score_answer(const std::string& prediction, const std::string& reference,
                         Embedder& embedder);

// Sample Pearson correlation. Throws CorrelationError for length < 2 or a
// constant series.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

struct QuantileBins {
    std::vector<double> edges;            // size bins+1; edges[0] sits just below the minimum
    std::vector<std::size_t> assignment;  // parallel to the input values
    std::size_t bins() const { return edges.empty() ? 0 : edges.size() - 1; }
};

// Left-open right-closed quantile intervals with the lowest edge nudged
// 0.001 below the minimum. Duplicate edges collapse, yielding fewer bins.
QuantileBins quantile_bins(const std::vector<double>& values, std::size_t n_bins);

// Externally computed scores, keyed by (query_id, prompt_kind, config label).
class ExternalScores {
public:
    static ExternalScores load(const std::string& path);
    std::optional<ScoreTriple> find(const std::string& query_id, PromptKind kind,
                                    const std::string& config_label) const;
    std::size_t size() const { return scores_.size(); }

private:
    std::map<std::tuple<std::string, std::string, std::string>, ScoreTriple> scores_;
};

struct RunOptions {
    const ExternalScores* external_scores = nullptr;
    std::ostream* progress = nullptr;       // one line per record when set
    std::ostream* partial_records = nullptr;  // records streamed as CSV as they finish
};

// Runs the full grid. Emits exactly one record per (case, kind, config) even
// when generation fails; failures are noted on the record and the run
// continues. Records come back sorted by (query_id, prompt_kind, config).
// A hyperlinked prompt renders as its unified counterpart when the config
// has expansion disabled, mirroring how the baseline system was prompted.
std::vector<BenchmarkRecord> run_benchmark(const std::vector<BenchmarkCase>& cases,
                                           const std::vector<PromptKind>& kinds,
                                           const std::vector<RetrievalConfig>& configs,
                                           const Retriever& retriever, Generator& generator,
                                           const RunOptions& options = {});

// Line-delimited JSON suite file: {"query_id":..,"question":..,"reference":..}.
std::vector<BenchmarkCase> load_suite(const std::string& path);

// Records CSV (stable column order, version header line).
void write_records_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out);
void write_records_csv_header(std::ostream& out);
void write_record_csv_row(const BenchmarkRecord& record, std::ostream& out);
std::vector<BenchmarkRecord> read_records_csv(std::istream& in);

struct ConfigAggregate {
    std::string label;
    std::size_t records = 0;
    std::size_t scored = 0;
    double mean_chunks = 0.0;
    double mean_tokens = 0.0;
    double mean_latency = 0.0;
    std::optional<double> mean_p, mean_r, mean_f1;
    std::optional<double> corr_f1_tokens, corr_f1_latency;
    std::optional<double> corr_f1_len_ref, corr_f1_len_pred;
    std::vector<std::optional<double>> f1_by_ref_bin;  // parallel to Report::bin_edges intervals
};

struct PromptAggregate {
    PromptKind kind = PromptKind::kBasic;
    std::size_t records = 0;
    double mean_tokens = 0.0;
    double mean_latency = 0.0;
    std::optional<double> mean_p, mean_r, mean_f1;
};

struct Report {
    std::size_t total_records = 0;
    std::size_t failed_records = 0;
    std::vector<ConfigAggregate> per_config;
    std::vector<PromptAggregate> per_prompt;
    std::vector<double> bin_edges;  // global len_ref quartile edges (empty when undefined)
};

// Per-config and per-prompt means, cost/quality correlations, and mean F1
// per reference-length quartile. Undefined correlations become absent cells.
Report aggregate_report(const std::vector<BenchmarkRecord>& records);

std::string render_report(const Report& report);

}  // namespace larag

#include "larag/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "larag/errors.hpp"

namespace larag {
namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

// Splits one CSV record off `in`; handles quoted fields spanning lines.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    int c;
    while ((c = in.get()) != EOF) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(static_cast<char>(c));
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            field.push_back(static_cast<char>(c));
        }
    }
    if (!any) return false;
    fields.push_back(std::move(field));
    return true;
}

constexpr const char* kRecordsVersionLine = "# larag.records.v1";
constexpr const char* kRecordsHeader =
    "query_id,prompt_kind,config,retrieved_chunks,prompt_tokens,completion_tokens,total_tokens,"
    "latency_s,p,r,f1,len_ref,len_pred,error,answer";

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

std::optional<double> try_pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    try {
        return pearson(xs, ys);
    } catch (const CorrelationError&) {
        return std::nullopt;
    }
}

}  // namespace

ScoreTriple ScoreTriple::from_pr(double p, double r) {
    ScoreTriple t;
    t.precision = p;
    t.recall = r;
    t.f1 = (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
    return t;
}

std::vector<std::string> score_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            token.push_back(static_cast<char>(std::tolower(c)));
        } else if (!token.empty()) {
            out.push_back(std::move(token));
            token.clear();
        }
    }
    if (!token.empty()) out.push_back(std::move(token));
    return out;
}

ScoreTriple score_answer(const std::string& prediction, const std::string& reference,
                         Embedder& embedder) {
    const std::vector<std::string> pred_tokens = score_tokens(prediction);
    const std::vector<std::string> ref_tokens = score_tokens(reference);
    if (pred_tokens.empty()) throw ScoringError("score_answer: prediction has no tokens");
    if (ref_tokens.empty()) throw ScoringError("score_answer: reference has no tokens");

    std::unordered_map<std::string, EmbeddingVector> cache;
    auto vec_of = [&](const std::string& token) -> const EmbeddingVector& {
        auto it = cache.find(token);
        if (it == cache.end()) it = cache.emplace(token, embedder.embed(token)).first;
        return it->second;
    };

    // Pairwise similarity matrix, negatives clamped: dissimilar tokens give
    // no support rather than penalties.
    std::vector<std::vector<double>> sim(pred_tokens.size(),
                                         std::vector<double>(ref_tokens.size(), 0.0));
    for (std::size_t i = 0; i < pred_tokens.size(); ++i)
        for (std::size_t j = 0; j < ref_tokens.size(); ++j)
            sim[i][j] = std::max(0.0, cosine(vec_of(pred_tokens[i]), vec_of(ref_tokens[j])));

    double p_sum = 0.0;
    for (std::size_t i = 0; i < pred_tokens.size(); ++i)
        p_sum += *std::max_element(sim[i].begin(), sim[i].end());
    double r_sum = 0.0;
    for (std::size_t j = 0; j < ref_tokens.size(); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < pred_tokens.size(); ++i) best = std::max(best, sim[i][j]);
        r_sum += best;
    }
    return ScoreTriple::from_pr(p_sum / static_cast<double>(pred_tokens.size()),
                                r_sum / static_cast<double>(ref_tokens.size()));
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("pearson: series lengths differ");
    const std::size_t n = xs.size();
    if (n < 2) throw CorrelationError("pearson: need at least two points");
    const double mx = mean_of(xs), my = mean_of(ys);
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0) throw CorrelationError("pearson: constant series");
    return cov / std::sqrt(vx * vy);
}

QuantileBins quantile_bins(const std::vector<double>& values, std::size_t n_bins) {
    if (n_bins < 1) throw std::invalid_argument("quantile_bins: need at least one bin");
    if (values.size() < n_bins)
        throw std::invalid_argument("quantile_bins: fewer values than bins");

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    auto quantile = [&](double q) {
        const double h = static_cast<double>(n - 1) * q;
        const std::size_t lo = static_cast<std::size_t>(h);
        const double frac = h - static_cast<double>(lo);
        if (lo + 1 >= n) return sorted[n - 1];
        return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
    };

    std::vector<double> edges;
    edges.push_back(sorted.front() - 1e-3);  // the qcut-style open lower bound
    for (std::size_t b = 1; b <= n_bins; ++b) {
        const double e = quantile(static_cast<double>(b) / static_cast<double>(n_bins));
        if (e > edges.back()) edges.push_back(e);  // duplicate edges collapse
    }

    QuantileBins out;
    out.edges = edges;
    out.assignment.reserve(values.size());
    for (double v : values) {
        std::size_t bin = out.bins() - 1;
        for (std::size_t b = 1; b < edges.size(); ++b) {
            if (v <= edges[b]) {
                bin = b - 1;
                break;
            }
        }
        out.assignment.push_back(bin);
    }
    return out;
}

ExternalScores ExternalScores::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open external scores file: " + path);
    ExternalScores out;
    std::vector<std::string> fields;
    bool saw_header = false;
    while (read_csv_record(in, fields)) {
        if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
        if (!fields.empty() && !fields[0].empty() && fields[0][0] == '#') continue;
        if (!saw_header) {
            saw_header = true;
            if (fields.size() < 6 || fields[0] != "query_id")
                throw Error("external scores file needs header "
                            "query_id,prompt_kind,config,p,r,f1");
            continue;
        }
        if (fields.size() < 6) throw Error("external scores row is too short");
        ScoreTriple t;
        t.precision = std::stod(fields[3]);
        t.recall = std::stod(fields[4]);
        t.f1 = std::stod(fields[5]);
        out.scores_[{fields[0], fields[1], fields[2]}] = t;
    }
    return out;
}

std::optional<ScoreTriple> ExternalScores::find(const std::string& query_id, PromptKind kind,
                                                const std::string& config_label) const {
    auto it = scores_.find({query_id, to_string(kind), config_label});
    if (it == scores_.end()) return std::nullopt;
    return it->second;
}

std::vector<BenchmarkCase> load_suite(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open benchmark suite: " + path);
    std::vector<BenchmarkCase> cases;
    std::map<std::string, bool> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error("suite line " + std::to_string(line_no) + " is not valid JSON: " +
                        e.what());
        }
        BenchmarkCase c;
        c.query_id = j.at("query_id").get<std::string>();
        c.question = j.at("question").get<std::string>();
        c.reference = j.at("reference").get<std::string>();
        if (c.reference.empty())
            throw Error("suite case " + c.query_id + " has an empty reference");
        if (seen[c.query_id])
            throw Error("suite has a duplicate query_id: " + c.query_id);
        seen[c.query_id] = true;
        cases.push_back(std::move(c));
    }
    return cases;
}

void write_records_csv_header(std::ostream& out) {
    out << kRecordsVersionLine << "\n" << kRecordsHeader << "\n";
}

void write_record_csv_row(const BenchmarkRecord& r, std::ostream& out) {
    out << csv_escape(r.query_id) << ',' << to_string(r.prompt_kind) << ','
        << csv_escape(r.config_label) << ',' << r.retrieved_chunks << ',' << r.prompt_tokens << ','
        << r.completion_tokens << ',' << r.total_tokens << ',' << fmt_double(r.latency_seconds)
        << ',';
    if (r.scores) {
        out << fmt_double(r.scores->precision) << ',' << fmt_double(r.scores->recall) << ','
            << fmt_double(r.scores->f1);
    } else {
        out << ",,";
    }
    out << ',' << r.len_ref << ',' << r.len_pred << ',' << csv_escape(r.error) << ','
        << csv_escape(r.answer) << "\n";
}

void write_records_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
    write_records_csv_header(out);
    for (const auto& r : records) write_record_csv_row(r, out);
}

std::vector<BenchmarkRecord> read_records_csv(std::istream& in) {
    std::vector<BenchmarkRecord> records;
    std::vector<std::string> fields;
    bool saw_header = false;
    while (read_csv_record(in, fields)) {
        if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
        if (!fields[0].empty() && fields[0][0] == '#') continue;
        if (!saw_header) {
            saw_header = true;
            std::string joined;
            for (std::size_t i = 0; i < fields.size(); ++i)
                joined += (i ? "," : "") + fields[i];
            if (joined != kRecordsHeader)
                throw Error("records CSV has an unexpected header: " + joined);
            continue;
        }
        if (fields.size() != 15)
            throw Error("records CSV row has " + std::to_string(fields.size()) +
                        " fields, expected 15");
        BenchmarkRecord r;
        r.query_id = fields[0];
        r.prompt_kind = prompt_kind_from_string(fields[1]);
        r.config_label = fields[2];
        r.retrieved_chunks = static_cast<std::size_t>(std::stoull(fields[3]));
        r.prompt_tokens = std::stol(fields[4]);
        r.completion_tokens = std::stol(fields[5]);
        r.total_tokens = std::stol(fields[6]);
        r.latency_seconds = std::stod(fields[7]);
        if (!fields[8].empty()) {
            ScoreTriple t;
            t.precision = std::stod(fields[8]);
            t.recall = std::stod(fields[9]);
            t.f1 = std::stod(fields[10]);
            r.scores = t;
        }
        r.len_ref = static_cast<std::size_t>(std::stoull(fields[11]));
        r.len_pred = static_cast<std::size_t>(std::stoull(fields[12]));
        r.error = fields[13];
        r.answer = fields[14];
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<BenchmarkRecord> run_benchmark(const std::vector<BenchmarkCase>& cases,
                                           const std::vector<PromptKind>& kinds,
                                           const std::vector<RetrievalConfig>& configs,
                                           const Retriever& retriever, Generator& generator,
                                           const RunOptions& options) {
    std::vector<BenchmarkRecord> records;
    records.reserve(cases.size() * kinds.size() * configs.size());

    // The surrogate scorer always runs on the offline embedder so scores are
    // deterministic even when retrieval uses a remote one.
    OfflineEmbedder scoring_embedder;

    for (const auto& bench_case : cases) {
        for (const auto kind : kinds) {
            for (const auto& config : configs) {
                BenchmarkRecord record;
                record.query_id = bench_case.query_id;
                record.prompt_kind = kind;
                record.config_label = config.label();
                record.len_ref = score_tokens(bench_case.reference).size();

                const auto started = std::chrono::steady_clock::now();
                try {
                    RetrievedContext ctx =
                        retriever.retrieve_link_aware(bench_case.question, config);
                    record.retrieved_chunks = ctx.final_ids.size();

                    // Without expansion there is no linked block to show; the
                    // fourth strategy falls back to the unified template.
                    const PromptKind effective =
                        (kind == PromptKind::kHyperlinked && !config.expansion_enabled())
                            ? PromptKind::kUnified
                            : kind;
                    const std::string prompt =
                        render_prompt(effective, ctx, bench_case.question);

                    GenerationResult gen = generator.generate(prompt);
                    const auto elapsed = std::chrono::steady_clock::now() - started;

                    record.answer = gen.answer;
                    record.prompt_tokens = gen.prompt_tokens;
                    record.completion_tokens = gen.completion_tokens;
                    record.total_tokens = gen.total_tokens;
                    record.latency_seconds = generator.deterministic()
                                                 ? gen.latency_seconds
                                                 : std::chrono::duration<double>(elapsed).count();
                    record.len_pred = score_tokens(gen.answer).size();

                    std::optional<ScoreTriple> external;
                    if (options.external_scores)
                        external = options.external_scores->find(record.query_id, kind,
                                                                 record.config_label);
                    if (external) {
                        record.scores = external;
                    } else {
                        record.scores =
                            score_answer(gen.answer, bench_case.reference, scoring_embedder);
                    }
                } catch (const std::exception& e) {
                    record.error = e.what();
                    record.scores.reset();
                }

                if (options.progress)
                    (*options.progress)
                        << record.query_id << " " << to_string(record.prompt_kind) << " "
                        << record.config_label << (record.error.empty() ? " ok" : " FAILED")
                        << "\n";
                if (options.partial_records) write_record_csv_row(record, *options.partial_records);
                records.push_back(std::move(record));
            }
        }
    }

    std::sort(records.begin(), records.end(),
              [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
                  if (a.query_id != b.query_id) return a.query_id < b.query_id;
                  const std::string ka = to_string(a.prompt_kind), kb = to_string(b.prompt_kind);
                  if (ka != kb) return ka < kb;
                  return a.config_label < b.config_label;
              });
    return records;
}

Report aggregate_report(const std::vector<BenchmarkRecord>& records) {
    if (records.empty()) throw Error("aggregate_report: no records");

    Report report;
    report.total_records = records.size();
    for (const auto& r : records)
        if (!r.error.empty()) ++report.failed_records;

    // Global reference-length quartiles over scored records.
    std::vector<double> all_len_ref;
    for (const auto& r : records)
        if (r.scores) all_len_ref.push_back(static_cast<double>(r.len_ref));
    QuantileBins bins;
    bool have_bins = false;
    if (all_len_ref.size() >= 4) {
        bins = quantile_bins(all_len_ref, 4);
        have_bins = bins.bins() >= 1;
        if (have_bins) report.bin_edges = bins.edges;
    }

    std::map<std::string, std::vector<const BenchmarkRecord*>> by_config;
    std::map<std::string, std::vector<const BenchmarkRecord*>> by_prompt;
    for (const auto& r : records) {
        by_config[r.config_label].push_back(&r);
        by_prompt[to_string(r.prompt_kind)].push_back(&r);
    }

    for (const auto& [label, group] : by_config) {
        ConfigAggregate agg;
        agg.label = label;
        agg.records = group.size();
        std::vector<double> chunks, tokens, latency;
        std::vector<double> f1, p, rvals, lref, lpred, tok_scored, lat_scored;
        for (const auto* r : group) {
            if (r->error.empty()) {
                chunks.push_back(static_cast<double>(r->retrieved_chunks));
                tokens.push_back(static_cast<double>(r->total_tokens));
                latency.push_back(r->latency_seconds);
            }
            if (r->scores) {
                f1.push_back(r->scores->f1);
                p.push_back(r->scores->precision);
                rvals.push_back(r->scores->recall);
                lref.push_back(static_cast<double>(r->len_ref));
                lpred.push_back(static_cast<double>(r->len_pred));
                tok_scored.push_back(static_cast<double>(r->total_tokens));
                lat_scored.push_back(r->latency_seconds);
            }
        }
        agg.mean_chunks = mean_of(chunks);
        agg.mean_tokens = mean_of(tokens);
        agg.mean_latency = mean_of(latency);
        agg.scored = f1.size();
        if (!f1.empty()) {
            agg.mean_p = mean_of(p);
            agg.mean_r = mean_of(rvals);
            agg.mean_f1 = mean_of(f1);
            agg.corr_f1_tokens = try_pearson(f1, tok_scored);
            agg.corr_f1_latency = try_pearson(f1, lat_scored);
            agg.corr_f1_len_ref = try_pearson(f1, lref);
            agg.corr_f1_len_pred = try_pearson(f1, lpred);
        }
        if (have_bins) {
            std::vector<std::vector<double>> per_bin(bins.bins());
            std::size_t scored_i = 0;
            for (const auto& rec : records) {
                if (!rec.scores) continue;
                const std::size_t bin = bins.assignment[scored_i++];
                if (rec.config_label == label) per_bin[bin].push_back(rec.scores->f1);
            }
            for (const auto& xs : per_bin)
                agg.f1_by_ref_bin.push_back(xs.empty() ? std::nullopt
                                                       : std::optional<double>(mean_of(xs)));
        }
        report.per_config.push_back(std::move(agg));
    }

    for (const auto& [name, group] : by_prompt) {
        PromptAggregate agg;
        agg.kind = prompt_kind_from_string(name);
        agg.records = group.size();
        std::vector<double> tokens, latency, f1, p, rvals;
        for (const auto* r : group) {
            if (r->error.empty()) {
                tokens.push_back(static_cast<double>(r->total_tokens));
                latency.push_back(r->latency_seconds);
            }
            if (r->scores) {
                f1.push_back(r->scores->f1);
                p.push_back(r->scores->precision);
                rvals.push_back(r->scores->recall);
            }
        }
        agg.mean_tokens = mean_of(tokens);
        agg.mean_latency = mean_of(latency);
        if (!f1.empty()) {
            agg.mean_p = mean_of(p);
            agg.mean_r = mean_of(rvals);
            agg.mean_f1 = mean_of(f1);
        }
        report.per_prompt.push_back(std::move(agg));
    }

    return report;
}

namespace {

std::string cell(const std::optional<double>& v) {
    if (!v) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *v);
    return buf;
}

std::string cell(double v) { return cell(std::optional<double>(v)); }

}  // namespace

std::string render_report(const Report& report) {
    std::ostringstream out;
    out << "# larag.report.v1\n";
    out << "records: " << report.total_records << " (failed: " << report.failed_records << ")\n";
    out << "\n== Per-configuration means ==\n";
    out << std::left << std::setw(14) << "config" << std::right << std::setw(8) << "runs"
        << std::setw(10) << "chunks" << std::setw(12) << "tokens" << std::setw(10) << "time_s"
        << std::setw(9) << "P" << std::setw(9) << "R" << std::setw(9) << "F1" << "\n";
    for (const auto& c : report.per_config) {
        out << std::left << std::setw(14) << c.label << std::right << std::setw(8) << c.records
            << std::setw(10) << cell(c.mean_chunks) << std::setw(12) << cell(c.mean_tokens)
            << std::setw(10) << cell(c.mean_latency) << std::setw(9) << cell(c.mean_p)
            << std::setw(9) << cell(c.mean_r) << std::setw(9) << cell(c.mean_f1) << "\n";
    }

    out << "\n== Per-prompt means ==\n";
    out << std::left << std::setw(14) << "prompt" << std::right << std::setw(8) << "runs"
        << std::setw(12) << "tokens" << std::setw(10) << "time_s" << std::setw(9) << "P"
        << std::setw(9) << "R" << std::setw(9) << "F1" << "\n";
    for (const auto& pr : report.per_prompt) {
        out << std::left << std::setw(14) << to_string(pr.kind) << std::right << std::setw(8)
            << pr.records << std::setw(12) << cell(pr.mean_tokens) << std::setw(10)
            << cell(pr.mean_latency) << std::setw(9) << cell(pr.mean_p) << std::setw(9)
            << cell(pr.mean_r) << std::setw(9) << cell(pr.mean_f1) << "\n";
    }

    out << "\n== Cost/quality correlations (per record, within each configuration) ==\n";
    out << std::left << std::setw(14) << "config" << std::right << std::setw(18)
        << "corr(F1,tokens)" << std::setw(18) << "corr(F1,time)" << std::setw(18)
        << "corr(F1,len_ref)" << std::setw(19) << "corr(F1,len_pred)" << "\n";
    for (const auto& c : report.per_config) {
        out << std::left << std::setw(14) << c.label << std::right << std::setw(18)
            << cell(c.corr_f1_tokens) << std::setw(18) << cell(c.corr_f1_latency) << std::setw(18)
            << cell(c.corr_f1_len_ref) << std::setw(19) << cell(c.corr_f1_len_pred) << "\n";
    }

    if (!report.bin_edges.empty()) {
        out << "\n== Mean F1 by reference-length quartile ==\n";
        out << std::left << std::setw(14) << "config";
        for (std::size_t b = 0; b + 1 < report.bin_edges.size(); ++b) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "(%g, %g]", report.bin_edges[b],
                          report.bin_edges[b + 1]);
            out << std::right << std::setw(19) << buf;
        }
        out << "\n";
        for (const auto& c : report.per_config) {
            out << std::left << std::setw(14) << c.label;
            for (const auto& v : c.f1_by_ref_bin) out << std::right << std::setw(19) << cell(v);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace larag

#include "larag/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "larag/bench.hpp"
#include "larag/config.hpp"
#include "larag/errors.hpp"
#include "larag/ingest.hpp"
#include "larag/seed_corpus.hpp"

namespace larag::cli {
namespace {

namespace fs = std::filesystem;

std::string iso_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// "n,d,m" -> the expansion triple.
void parse_triple(const std::string& text, RetrievalConfig& config) {
    std::size_t a = 0, b = 0, c = 0;
    char comma1 = 0, comma2 = 0;
    std::istringstream in(text);
    if (!(in >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',' ||
        !(in >> std::ws).eof())
        throw ConfigError("traversal triple must look like n_links,depth,top_m: " + text);
    config.n_links = a;
    config.depth = b;
    config.top_m = c;
}

// "K:n,d,m" -> a full retrieval config.
RetrievalConfig parse_config_token(const std::string& token, AssemblyMode mode) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos || colon == 0)
        throw ConfigError("benchmark config must look like k:n_links,depth,top_m: " + token);
    RetrievalConfig config;
    config.assembly_mode = mode;
    try {
        config.k = std::stoull(token.substr(0, colon));
    } catch (const std::exception&) {
        throw ConfigError("bad k in benchmark config: " + token);
    }
    parse_triple(token.substr(colon + 1), config);
    return config;
}

CorpusIndex load_index_for(const AppConfig& config, Embedder& embedder) {
    return CorpusIndex::load(config.index_path, embedder.id());
}

int cmd_seed_corpus(const std::string& out_dir) {
    const fs::path root(out_dir);
    fs::create_directories(root / "corpus");
    const std::size_t pages = write_seed_corpus((root / "corpus").string());
    write_seed_suite((root / "benchmark.ndjson").string());

    AppConfig sample;
    sample.corpus_root = (root / "corpus").string();
    sample.base_url_prefix = kSeedBaseUrl;
    sample.index_path = (root / "index.ndjson").string();
    std::ofstream cfg(root / "larag.json", std::ios::binary);
    cfg << config_to_json(sample);

    std::cout << "seed corpus written: " << pages << " pages under "
              << (root / "corpus").string() << "\n"
              << "benchmark suite: " << (root / "benchmark.ndjson").string() << " (20 cases)\n"
              << "sample config: " << (root / "larag.json").string() << "\n";
    return 0;
}

int cmd_ingest(const AppConfig& config, const std::string& warnings_path) {
    auto embedder = make_embedder(config.embedder);
    std::vector<LinkWarning> warnings;
    IngestStats stats;
    CorpusIndex index = ingest_corpus(config.corpus_root, config.base_url_prefix,
                                      config.chunk_size, config.overlap, *embedder, &warnings,
                                      &stats);
    index.save(config.index_path);
    const std::string wpath =
        warnings_path.empty() ? config.index_path + ".warnings.ndjson" : warnings_path;
    write_warnings_ndjson(warnings, wpath);

    std::cout << "pages=" << stats.pages << " sections=" << stats.sections
              << " chunks=" << stats.chunks << " links=" << stats.links
              << " inserted=" << stats.inserted << " warnings=" << warnings.size() << "\n"
              << "index: " << config.index_path << "\n";
    return 0;
}

int cmd_query(const AppConfig& config, const std::string& question) {
    if (question.empty()) throw ConfigError("query needs a --question");
    auto embedder = make_embedder(config.embedder);
    auto generator = make_generator(config.generator);
    const CorpusIndex index = load_index_for(config, *embedder);
    const Retriever retriever(index, *embedder);

    const RetrievedContext ctx = retriever.retrieve_link_aware(question, config.retrieval);
    const PromptKind effective =
        (config.prompt_kind == PromptKind::kHyperlinked && !config.retrieval.expansion_enabled())
            ? PromptKind::kUnified
            : config.prompt_kind;
    RenderNotes notes;
    const std::string prompt = render_prompt(effective, ctx, question, &notes);
    const GenerationResult result = generator->generate(prompt);

    std::cout << result.answer << "\n\n-- retrieval trace (" << config.retrieval.label() << ", "
              << to_string(config.retrieval.assembly_mode) << ", prompt " << to_string(effective)
              << ") --\n";
    for (const auto& seed : ctx.seeds) {
        char score[32];
        std::snprintf(score, sizeof(score), "%.4f", seed.score);
        std::cout << "seed     " << seed.chunk.id << " score=" << score << "\n";
    }
    for (const auto& e : ctx.expanded) {
        char score[32];
        std::snprintf(score, sizeof(score), "%.4f", e.link_score);
        std::cout << "expanded " << e.chunk.id << " via " << e.from_id << " -> "
                  << e.via.target_url
                  << (e.via.target_anchor ? "#" + *e.via.target_anchor : std::string())
                  << " link_score=" << score << "\n";
    }
    std::cout << "final context: " << ctx.final_ids.size() << " chunks, "
              << result.total_tokens << " tokens"
              << (result.tokens_estimated ? " (estimated)" : "") << "\n";
    if (notes.empty_linked_block)
        std::cout << "note: hyperlinked prompt rendered with an empty linked block\n";
    return 0;
}

int cmd_bench(const AppConfig& config, const std::string& suite_path, const std::string& out_path,
              const std::vector<std::string>& kind_names,
              const std::vector<std::string>& config_tokens, const std::string& scores_path) {
    auto embedder = make_embedder(config.embedder);
    auto generator = make_generator(config.generator);
    const CorpusIndex index = load_index_for(config, *embedder);
    const Retriever retriever(index, *embedder);

    const std::vector<BenchmarkCase> cases = load_suite(suite_path);

    std::vector<PromptKind> kinds;
    for (const auto& name : kind_names) kinds.push_back(prompt_kind_from_string(name));
    std::vector<RetrievalConfig> configs;
    for (const auto& token : config_tokens)
        configs.push_back(parse_config_token(token, config.retrieval.assembly_mode));

    ExternalScores external;
    RunOptions options;
    if (!scores_path.empty()) {
        external = ExternalScores::load(scores_path);
        options.external_scores = &external;
    }

    // Timestamps live only in the sidecar log, keeping the CSV byte-stable.
    std::ofstream log(out_path + ".log", std::ios::binary);
    log << "started " << iso_now() << "\n";

    // Rows stream to the output file as they finish so an interrupted run
    // still leaves usable partial output; on success the file is rewritten
    // in sorted order.
    std::ofstream partial(out_path, std::ios::binary);
    if (!partial) throw Error("cannot write records file: " + out_path);
    write_records_csv_header(partial);
    options.partial_records = &partial;
    options.progress = &log;

    const std::vector<BenchmarkRecord> records =
        run_benchmark(cases, kinds, configs, retriever, *generator, options);
    partial.close();

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    write_records_csv(records, out);
    out.close();
    log << "finished " << iso_now() << "\n";

    std::size_t failed = 0;
    for (const auto& r : records)
        if (!r.error.empty()) ++failed;
    std::cout << "records=" << records.size() << " failed=" << failed << " -> " << out_path
              << "\n";
    return failed == 0 ? 0 : 1;
}

int cmd_report(const std::string& records_path) {
    std::ifstream in(records_path, std::ios::binary);
    if (!in) throw Error("cannot open records file: " + records_path);
    const std::vector<BenchmarkRecord> records = read_records_csv(in);
    if (records.empty()) throw Error("records file has no records: " + records_path);
    std::cout << render_report(aggregate_report(records));
    return 0;
}

int cmd_inspect(const AppConfig& config, const std::string& chunk_id) {
    auto embedder = make_embedder(config.embedder);
    const CorpusIndex index = load_index_for(config, *embedder);
    const Chunk* chunk = index.find(chunk_id);
    if (!chunk) throw Error("no chunk with id: " + chunk_id);

    nlohmann::json j;
    j["id"] = chunk->id;
    j["source"] = chunk->source_url;
    j["anchor_name"] = chunk->anchor_name;
    j["chunk_index"] = chunk->chunk_index;
    j["text"] = chunk->text;
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : chunk->links) {
        nlohmann::json jl;
        jl["url"] = l.target_url;
        jl["anchor"] = l.target_anchor ? nlohmann::json(*l.target_anchor) : nlohmann::json();
        jl["context"] = l.context;
        jl["internal"] = l.is_internal;
        links.push_back(jl);
    }
    j["links"] = links;
    j["links_context"] = chunk->links_context;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        // The config file must be known before flag defaults are bound.
        std::optional<std::string> config_file;
        if (const char* v = std::getenv("LARAG_CONFIG")) config_file = v;
        for (int i = 1; i + 1 < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config-file") config_file = argv[i + 1];
        }
        AppConfig config = load_config(config_file);

        CLI::App app{"link-aware retrieval-augmented generation over HTML documentation"};
        app.require_subcommand(1);
        std::string config_file_flag;
        app.add_option("--config-file", config_file_flag, "JSON config file");

        auto add_common = [&](CLI::App* cmd) {
            cmd->add_option("--index", config.index_path, "index file path");
            cmd->add_option("--embedder", config.embedder.kind, "offline | remote");
            cmd->add_option("--embed-endpoint", config.embedder.endpoint);
            cmd->add_option("--embed-path", config.embedder.path);
            cmd->add_option("--embed-model", config.embedder.model);
            cmd->add_option("--embed-api-key", config.embedder.api_key);
            cmd->add_option("--embed-dimension", config.embedder.dimension);
            cmd->add_option("--embed-timeout", config.embedder.timeout_seconds);
        };
        auto add_generator = [&](CLI::App* cmd) {
            cmd->add_option("--generator", config.generator.kind, "mock | remote");
            cmd->add_option("--gen-endpoint", config.generator.endpoint);
            cmd->add_option("--gen-path", config.generator.path);
            cmd->add_option("--gen-model", config.generator.model);
            cmd->add_option("--gen-api-key", config.generator.api_key);
            cmd->add_option("--gen-temperature", config.generator.temperature);
            cmd->add_option("--gen-timeout", config.generator.timeout_seconds);
        };
        auto add_retrieval = [&](CLI::App* cmd, std::string& triple) {
            cmd->add_option("--k", config.retrieval.k, "seed chunks retrieved");
            cmd->add_option("--config", triple, "expansion triple n_links,depth,top_m");
            cmd->add_option_function<std::string>(
                "--assembly",
                [&](const std::string& v) {
                    config.retrieval.assembly_mode = assembly_mode_from_string(v);
                },
                "augment | rerank_truncate");
        };

        // seed-corpus
        auto* seed = app.add_subcommand("seed-corpus",
                                        "materialize the bundled synthetic corpus and suite");
        std::string seed_out = "seed";
        seed->add_option("--out", seed_out, "output directory");

        // ingest
        auto* ingest = app.add_subcommand("ingest", "parse, chunk, embed, and index a corpus");
        std::string warnings_path;
        ingest->add_option("--corpus-root", config.corpus_root, "directory of .html files");
        ingest->add_option("--base-url", config.base_url_prefix, "URL prefix for corpus files");
        ingest->add_option("--chunk-size", config.chunk_size);
        ingest->add_option("--overlap", config.overlap);
        ingest->add_option("--warnings", warnings_path, "discarded-link NDJSON path");
        add_common(ingest);

        // query
        auto* query = app.add_subcommand("query", "answer one question against the index");
        std::string question;
        std::string query_triple;
        query->add_option("--question,-q", question, "the question")->required();
        query->add_option_function<std::string>(
            "--prompt", [&](const std::string& v) { config.prompt_kind = prompt_kind_from_string(v); },
            "basic | role_based | reasoning | hyperlinked | unified");
        add_generator(query);
        add_retrieval(query, query_triple);
        add_common(query);

        // bench
        auto* bench = app.add_subcommand("bench", "run the query x prompt x config grid");
        std::string suite_path, bench_out = "records.csv", scores_path;
        std::vector<std::string> kind_names = {"basic", "role_based", "reasoning", "hyperlinked"};
        std::vector<std::string> config_tokens = {"5:0,0,0", "10:0,0,0", "5:1,1,1"};
        bench->add_option("--suite", suite_path, "benchmark suite NDJSON")->required();
        bench->add_option("--out", bench_out, "records CSV path");
        bench->add_option("--kinds", kind_names, "prompt kinds to run");
        bench->add_option("--configs", config_tokens, "retrieval configs, each k:n,d,m");
        bench->add_option("--scores", scores_path, "external scores CSV");
        bench->add_option_function<std::string>(
            "--assembly",
            [&](const std::string& v) {
                config.retrieval.assembly_mode = assembly_mode_from_string(v);
            },
            "augment | rerank_truncate");
        add_generator(bench);
        add_common(bench);

        // report
        auto* report = app.add_subcommand("report", "aggregate a records CSV");
        std::string records_path;
        report->add_option("--records", records_path, "records CSV path")->required();

        // inspect
        auto* inspect = app.add_subcommand("inspect", "dump one chunk's metadata by id");
        std::string chunk_id;
        inspect->add_option("--id", chunk_id, "chunk id")->required();
        add_common(inspect);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e);
        }

        if (seed->parsed()) return cmd_seed_corpus(seed_out);
        if (ingest->parsed()) return cmd_ingest(config, warnings_path);
        if (query->parsed()) {
            if (!query_triple.empty()) parse_triple(query_triple, config.retrieval);
            return cmd_query(config, question);
        }
        if (bench->parsed())
            return cmd_bench(config, suite_path, bench_out, kind_names, config_tokens,
                             scores_path);
        if (report->parsed()) return cmd_report(records_path);
        if (inspect->parsed()) return cmd_inspect(config, chunk_id);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace larag::cli

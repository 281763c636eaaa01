#include "larag/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "larag/chunk.hpp"
#include "larag/errors.hpp"

namespace larag {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot read document: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_html(const fs::path& path) {
    const std::string ext = path.extension().string();
    return ext == ".html" || ext == ".htm";
}

}  // namespace

CorpusIndex ingest_corpus(const std::string& corpus_root, const std::string& base_url_prefix,
                          std::size_t chunk_size, std::size_t overlap, Embedder& embedder,
                          std::vector<LinkWarning>* warnings, IngestStats* stats) {
    if (!fs::is_directory(corpus_root))
        throw IngestError("corpus root is not a directory: " + corpus_root);

    std::string prefix = base_url_prefix;
    if (!prefix.empty() && prefix.back() != '/') prefix += '/';

    std::vector<std::string> relative_paths;
    for (const auto& entry : fs::recursive_directory_iterator(corpus_root)) {
        if (!entry.is_regular_file() || !is_html(entry.path())) continue;
        relative_paths.push_back(fs::relative(entry.path(), corpus_root).generic_string());
    }
    std::sort(relative_paths.begin(), relative_paths.end());

    IngestStats local_stats;
    std::vector<Chunk> all_chunks;
    for (const auto& rel : relative_paths) {
        SourceDocument doc;
        doc.url = prefix + rel;
        doc.html = read_file(fs::path(corpus_root) / rel);
        const std::vector<Section> sections = parse_document(doc, prefix, warnings);
        ++local_stats.pages;
        local_stats.sections += sections.size();
        for (const auto& section : sections) {
            for (Chunk& chunk : chunk_section(section, chunk_size, overlap)) {
                local_stats.links += chunk.links.size();
                all_chunks.push_back(std::move(chunk));
            }
        }
    }
    local_stats.chunks = all_chunks.size();

    std::vector<std::string> texts;
    texts.reserve(all_chunks.size());
    for (const auto& c : all_chunks) texts.push_back(c.text);
    const std::vector<EmbeddingVector> vectors = embedder.embed_batch(texts);

    const int dimension =
        embedder.dimension() > 0
            ? embedder.dimension()
            : (vectors.empty() ? 0 : static_cast<int>(vectors.front().size()));
    CorpusIndex index(embedder.id(), dimension);
    std::vector<std::pair<Chunk, EmbeddingVector>> batch;
    batch.reserve(all_chunks.size());
    for (std::size_t i = 0; i < all_chunks.size(); ++i)
        batch.emplace_back(std::move(all_chunks[i]), vectors[i]);
    local_stats.inserted = index.upsert(batch);

    if (stats) *stats = local_stats;
    return index;
}

void write_warnings_ndjson(const std::vector<LinkWarning>& warnings, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write warnings file: " + path);
    for (const auto& w : warnings) {
        nlohmann::json j;
        j["href"] = w.href;
        j["base"] = w.base;
        j["reason"] = w.reason;
        out << j.dump() << "\n";
    }
}

}  // namespace larag

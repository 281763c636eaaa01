#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "larag/embed.hpp"
#include "larag/html.hpp"
#include "larag/index.hpp"

namespace larag {

struct IngestStats {
    std::size_t pages = 0;
    std::size_t sections = 0;
    std::size_t chunks = 0;
    std::size_t links = 0;
    std::size_t inserted = 0;
};

// Recursively discovers `.html`/`.htm` files under `corpus_root` (sorted by
// relative path so runs are deterministic), maps each file to
// base_url_prefix + relative path, parses, chunks, embeds, and upserts into
// a fresh index. Discarded-link warnings accumulate into *warnings.
CorpusIndex ingest_corpus(const std::string& corpus_root, const std::string& base_url_prefix,
                          std::size_t chunk_size, std::size_t overlap, Embedder& embedder,
                          std::vector<LinkWarning>* warnings = nullptr,
                          IngestStats* stats = nullptr);

void write_warnings_ndjson(const std::vector<LinkWarning>& warnings, const std::string& path);

}  // namespace larag

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "larag/chunk.hpp"
#include "larag/embed.hpp"

namespace larag {

// Scored result of a similarity query.
struct ScoredChunk {
    Chunk chunk;
    double score = 0.0;
};

struct IndexHeader {
    int format_version = 1;
    std::string embedder;
    int dimension = 0;
};

// The corpus: chunks with their embeddings, exact top-k cosine search, and
// hyperlink resolution. Search is an exhaustive scan; at documentation scale
// exactness is cheap and trivially matches a brute-force oracle. Reads are
// safely concurrent once construction finishes; upsert and save are not.
class CorpusIndex {
public:
    static constexpr int kFormatVersion = 1;

    CorpusIndex(std::string embedder_id, int dimension);

    const IndexHeader& header() const { return header_; }
    std::size_t size() const { return entries_.size(); }

    // Inserts chunks with their embeddings; ids already present are skipped,
    // not overwritten. Returns the number of new entries. Throws IndexError
    // when a vector does not match the header dimension.
    std::size_t upsert(const std::vector<std::pair<Chunk, EmbeddingVector>>& batch);

    // Exactly min(k, size) results, descending score, ties by ascending
    // chunk id. Empty index yields an empty result.
    std::vector<ScoredChunk> top_k(const EmbeddingVector& query, std::size_t k) const;

    // With an anchor: the chunks of that (url, anchor) in chunk_index order.
    // Without: every chunk of the page in document order. Unknown targets
    // yield an empty sequence (broken links are silently discarded).
    std::vector<Chunk> resolve_link(const std::string& target_url,
                                    const std::optional<std::string>& target_anchor) const;

    bool contains(const std::string& id) const { return by_id_.count(id) != 0; }
    const Chunk* find(const std::string& id) const;
    const EmbeddingVector* embedding_of(const std::string& id) const;

    // Ids in insertion order (the order save() writes them).
    std::vector<std::string> ids() const;

    // Line-delimited JSON: one header record, then one record per chunk with
    // its vector as a decimal array. load(save(x)) is observationally
    // identical to x.
    void save(const std::string& path) const;
    static CorpusIndex load(const std::string& path,
                            const std::optional<std::string>& expected_embedder = std::nullopt);

private:
    struct Entry {
        Chunk chunk;
        EmbeddingVector embedding;
    };

    IndexHeader header_;
    std::vector<Entry> entries_;                            // insertion order
    std::unordered_map<std::string, std::size_t> by_id_;    // id -> entries_ slot
    std::map<std::string, std::vector<std::size_t>> by_page_;
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_anchor_;
};

}  // namespace larag

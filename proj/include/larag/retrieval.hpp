#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "larag/embed.hpp"
#include "larag/index.hpp"

namespace larag {

enum class AssemblyMode {
    kAugment,         // seeds followed by every expanded chunk
    kRerankTruncate,  // union rescored against the query, truncated to k
};

std::string to_string(AssemblyMode mode);
AssemblyMode assembly_mode_from_string(const std::string& s);

// k plus the hyperlink-expansion triple. (n_links, depth, top_m) all zero
// means expansion is disabled and retrieval degenerates to plain top-k.
struct RetrievalConfig {
    std::size_t k = 5;
    std::size_t n_links = 1;  // outgoing links followed per chunk
    std::size_t depth = 1;    // maximum hops from a seed
    std::size_t top_m = 1;    // chunks retained per expanded link
    AssemblyMode assembly_mode = AssemblyMode::kAugment;

    bool expansion_enabled() const { return n_links > 0 && depth > 0 && top_m > 0; }
    // Label used in benchmark records and external-score keys, e.g. "k5-(1,1,1)".
    std::string label() const;
};

// One chunk pulled in through a hyperlink, with its provenance.
struct ExpandedChunk {
    Chunk chunk;
    LinkRef via;             // the link that reached it
    std::string from_id;     // id of the chunk the link came from
    double link_score = 0.0; // s(chunk | via.context)
};

struct RetrievedContext {
    std::string query;
    std::vector<ScoredChunk> seeds;        // initial top-k, score order
    std::vector<ExpandedChunk> expanded;   // DFS discovery order
    std::vector<std::string> final_ids;    // the context actually supplied to generation

    // Degenerate rerank events: links whose context and anchor were both
    // empty, leaving candidates in document order.
    std::size_t degenerate_reranks = 0;

    const Chunk* chunk_by_id(const std::string& id) const;
    bool is_seed(const std::string& id) const;
};

class Retriever {
public:
    Retriever(const CorpusIndex& index, Embedder& embedder)
        : index_(index), embedder_(embedder) {}

    // Plain top-k cosine retrieval; the baseline system.
    RetrievedContext retrieve_baseline(const std::string& query, std::size_t k) const;

    // Two-step link-aware retrieval: initial top-k, then on-the-fly DFS over
    // the hyperlinks stored in chunk metadata, with per-link context
    // reranking and a global visited set.
    RetrievedContext retrieve_link_aware(const std::string& query,
                                         const RetrievalConfig& config) const;

    // DFS expansion starting from the seeds, in seed-score order. `visited`
    // must already contain every seed id. Appends degenerate-rerank events
    // to *degenerate_events when given.
    std::vector<ExpandedChunk> expand_links(const std::vector<ScoredChunk>& seeds,
                                            const RetrievalConfig& config,
                                            std::set<std::string>& visited,
                                            std::size_t* degenerate_events = nullptr) const;

private:
    void expand_from(const Chunk& chunk, std::size_t hop, const RetrievalConfig& config,
                     std::set<std::string>& visited, std::vector<ExpandedChunk>& out,
                     std::size_t* degenerate_events) const;

    const CorpusIndex& index_;
    Embedder& embedder_;
};

// Scores each candidate chunk by cosine similarity between the link context
// embedding and the chunk embedding, descending, ties by ascending chunk id;
// keeps at most top_m. An empty context falls back to the link's target
// anchor; if that is also absent the candidates stay in document order and
// *degenerate is set. Stored embeddings are used when `index` is given,
// otherwise candidate texts are embedded on the fly.
std::vector<std::pair<Chunk, double>> rerank_link_candidates(
    const LinkRef& link, const std::vector<Chunk>& candidates, std::size_t top_m,
    Embedder& embedder, const CorpusIndex* index = nullptr, bool* degenerate = nullptr);

}  // namespace larag

#include "larag/retrieval.hpp"

#include <algorithm>
#include <stdexcept>

#include "larag/errors.hpp"

namespace larag {

std::string to_string(AssemblyMode mode) {
    return mode == AssemblyMode::kAugment ? "augment" : "rerank_truncate";
}

AssemblyMode assembly_mode_from_string(const std::string& s) {
    if (s == "augment") return AssemblyMode::kAugment;
    if (s == "rerank_truncate") return AssemblyMode::kRerankTruncate;
    throw std::invalid_argument("unknown assembly mode: " + s);
}

std::string RetrievalConfig::label() const {
    return "k" + std::to_string(k) + "-(" + std::to_string(n_links) + "," +
           std::to_string(depth) + "," + std::to_string(top_m) + ")";
}

const Chunk* RetrievedContext::chunk_by_id(const std::string& id) const {
    for (const auto& s : seeds)
        if (s.chunk.id == id) return &s.chunk;
    for (const auto& e : expanded)
        if (e.chunk.id == id) return &e.chunk;
    return nullptr;
}

bool RetrievedContext::is_seed(const std::string& id) const {
    for (const auto& s : seeds)
        if (s.chunk.id == id) return true;
    return false;
}

std::vector<std::pair<Chunk, double>> rerank_link_candidates(
    const LinkRef& link, const std::vector<Chunk>& candidates, std::size_t top_m,
    Embedder& embedder, const CorpusIndex* index, bool* degenerate) {
    if (top_m < 1) throw std::invalid_argument("rerank_link_candidates: top_m must be >= 1");
    if (degenerate) *degenerate = false;

    std::string probe = link.context;
    if (probe.find_first_not_of(" \t\r\n") == std::string::npos)
        probe = link.target_anchor.value_or("");
    if (probe.find_first_not_of(" \t\r\n") == std::string::npos) {
        // No linguistic signal to rank on: keep document order.
        if (degenerate) *degenerate = true;
        std::vector<std::pair<Chunk, double>> out;
        for (std::size_t i = 0; i < std::min(top_m, candidates.size()); ++i)
            out.emplace_back(candidates[i], 0.0);
        return out;
    }

    const EmbeddingVector probe_vec = embedder.embed(probe);
    std::vector<std::pair<Chunk, double>> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates) {
        const EmbeddingVector* stored = index ? index->embedding_of(c.id) : nullptr;
        const double s =
            stored ? cosine(probe_vec, *stored) : cosine(probe_vec, embedder.embed(c.text));
        scored.emplace_back(c, s);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first.id < b.first.id;
    });
    if (scored.size() > top_m) scored.resize(top_m);
    return scored;
}

RetrievedContext Retriever::retrieve_baseline(const std::string& query, std::size_t k) const {
    if (k < 1) throw std::invalid_argument("retrieve_baseline: k must be >= 1");
    if (index_.size() == 0) throw RetrievalError("retrieval over an empty index");

    RetrievedContext ctx;
    ctx.query = query;
    ctx.seeds = index_.top_k(embedder_.embed(query), k);
    for (const auto& s : ctx.seeds) ctx.final_ids.push_back(s.chunk.id);
    return ctx;
}

void Retriever::expand_from(const Chunk& chunk, std::size_t hop, const RetrievalConfig& config,
                            std::set<std::string>& visited, std::vector<ExpandedChunk>& out,
                            std::size_t* degenerate_events) const {
    if (hop >= config.depth) return;

    std::size_t followed = 0;
    for (const auto& link : chunk.links) {
        if (followed >= config.n_links) break;
        if (!link.is_internal) continue;  // external links are never traversed
        ++followed;

        const std::vector<Chunk> candidates =
            index_.resolve_link(link.target_url, link.target_anchor);
        if (candidates.empty()) continue;  // broken link: silently discarded

        std::vector<Chunk> unvisited;
        for (const auto& c : candidates)
            if (!visited.count(c.id)) unvisited.push_back(c);
        if (unvisited.empty()) continue;

        bool degenerate = false;
        auto retained =
            rerank_link_candidates(link, unvisited, config.top_m, embedder_, &index_, &degenerate);
        if (degenerate && degenerate_events) ++*degenerate_events;

        const std::size_t first_new = out.size();
        for (auto& [cand, score] : retained) {
            visited.insert(cand.id);
            out.push_back({cand, link, chunk.id, score});
        }
        const std::size_t last_new = out.size();
        for (std::size_t i = first_new; i < last_new; ++i) {
            const Chunk recurse_into = out[i].chunk;  // out may reallocate below
            expand_from(recurse_into, hop + 1, config, visited, out, degenerate_events);
        }
    }
}

std::vector<ExpandedChunk> Retriever::expand_links(const std::vector<ScoredChunk>& seeds,
                                                   const RetrievalConfig& config,
                                                   std::set<std::string>& visited,
                                                   std::size_t* degenerate_events) const {
    std::vector<ExpandedChunk> out;
    if (!config.expansion_enabled()) return out;
    for (const auto& seed : seeds)
        expand_from(seed.chunk, 0, config, visited, out, degenerate_events);
    return out;
}

RetrievedContext Retriever::retrieve_link_aware(const std::string& query,
                                                const RetrievalConfig& config) const {
    RetrievedContext ctx = retrieve_baseline(query, config.k);

    std::set<std::string> visited;
    for (const auto& s : ctx.seeds) visited.insert(s.chunk.id);
    ctx.expanded = expand_links(ctx.seeds, config, visited, &ctx.degenerate_reranks);

    if (config.assembly_mode == AssemblyMode::kAugment) {
        // Seeds in score order, then expansions in DFS discovery order. The
        // expanded chunks are not rescored against the query; relevance is
        // enforced implicitly by the initial retrieval step.
        ctx.final_ids.clear();
        for (const auto& s : ctx.seeds) ctx.final_ids.push_back(s.chunk.id);
        for (const auto& e : ctx.expanded) ctx.final_ids.push_back(e.chunk.id);
        return ctx;
    }

    // rerank_truncate: rescore the union against the query, keep top k.
    const EmbeddingVector query_vec = embedder_.embed(query);
    std::vector<std::pair<std::string, double>> union_scores;
    for (const auto& s : ctx.seeds) union_scores.emplace_back(s.chunk.id, s.score);
    for (const auto& e : ctx.expanded) {
        const EmbeddingVector* stored = index_.embedding_of(e.chunk.id);
        const double score =
            stored ? cosine(query_vec, *stored) : cosine(query_vec, embedder_.embed(e.chunk.text));
        union_scores.emplace_back(e.chunk.id, score);
    }
    std::sort(union_scores.begin(), union_scores.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    ctx.final_ids.clear();
    for (std::size_t i = 0; i < std::min(config.k, union_scores.size()); ++i)
        ctx.final_ids.push_back(union_scores[i].first);
    return ctx;
}

}  // namespace larag

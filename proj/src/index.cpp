#include "larag/index.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "larag/errors.hpp"

namespace larag {
namespace {

using nlohmann::json;

json chunk_to_json(const Chunk& c, const EmbeddingVector& v) {
    json links = json::array();
    for (const auto& l : c.links) {
        json jl;
        jl["url"] = l.target_url;
        if (l.target_anchor)
            jl["anchor"] = *l.target_anchor;
        else
            jl["anchor"] = nullptr;
        jl["context"] = l.context;
        jl["internal"] = l.is_internal;
        links.push_back(std::move(jl));
    }
    json j;
    j["id"] = c.id;
    j["source"] = c.source_url;
    j["anchor_name"] = c.anchor_name;
    j["chunk_index"] = c.chunk_index;
    j["text"] = c.text;
    j["links"] = std::move(links);
    j["links_context"] = c.links_context;
    j["embedding"] = v;
    return j;
}

std::pair<Chunk, EmbeddingVector> chunk_from_json(const json& j) {
    Chunk c;
    c.id = j.at("id").get<std::string>();
    c.source_url = j.at("source").get<std::string>();
    c.anchor_name = j.at("anchor_name").get<std::string>();
    c.chunk_index = j.at("chunk_index").get<std::size_t>();
    c.text = j.at("text").get<std::string>();
    for (const auto& jl : j.at("links")) {
        LinkRef l;
        l.target_url = jl.at("url").get<std::string>();
        if (!jl.at("anchor").is_null()) l.target_anchor = jl.at("anchor").get<std::string>();
        l.context = jl.at("context").get<std::string>();
        l.is_internal = jl.at("internal").get<bool>();
        c.links.push_back(std::move(l));
    }
    c.links_context = j.at("links_context").get<std::vector<std::string>>();
    EmbeddingVector v = j.at("embedding").get<EmbeddingVector>();
    return {std::move(c), std::move(v)};
}

}  // namespace

CorpusIndex::CorpusIndex(std::string embedder_id, int dimension) {
    header_.format_version = kFormatVersion;
    header_.embedder = std::move(embedder_id);
    header_.dimension = dimension;
}

std::size_t CorpusIndex::upsert(const std::vector<std::pair<Chunk, EmbeddingVector>>& batch) {
    std::size_t inserted = 0;
    for (const auto& [chunk, vec] : batch) {
        if (static_cast<int>(vec.size()) != header_.dimension)
            throw IndexError("upsert: vector dimension " + std::to_string(vec.size()) +
                             " does not match index dimension " +
                             std::to_string(header_.dimension) + " (chunk " + chunk.id + ")");
        if (by_id_.count(chunk.id)) continue;  // duplicates are skipped, never overwritten
        const std::size_t slot = entries_.size();
        entries_.push_back({chunk, vec});
        by_id_.emplace(chunk.id, slot);
        by_page_[chunk.source_url].push_back(slot);
        by_anchor_[{chunk.source_url, chunk.anchor_name}].push_back(slot);
        ++inserted;
    }
    return inserted;
}

std::vector<ScoredChunk> CorpusIndex::top_k(const EmbeddingVector& query, std::size_t k) const {
    if (k < 1) throw std::invalid_argument("top_k: k must be >= 1");
    struct Hit {
        double score;
        std::size_t slot;
    };
    std::vector<Hit> hits;
    hits.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        hits.push_back({cosine(query, entries_[i].embedding), i});
    std::sort(hits.begin(), hits.end(), [this](const Hit& a, const Hit& b) {
        if (a.score != b.score) return a.score > b.score;
        return entries_[a.slot].chunk.id < entries_[b.slot].chunk.id;
    });
    const std::size_t n = std::min(k, hits.size());
    std::vector<ScoredChunk> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({entries_[hits[i].slot].chunk, hits[i].score});
    return out;
}

std::vector<Chunk> CorpusIndex::resolve_link(
    const std::string& target_url, const std::optional<std::string>& target_anchor) const {
    std::vector<Chunk> out;
    if (target_anchor) {
        auto it = by_anchor_.find({target_url, *target_anchor});
        if (it == by_anchor_.end()) return out;
        std::vector<std::size_t> slots = it->second;
        std::sort(slots.begin(), slots.end(), [this](std::size_t a, std::size_t b) {
            return entries_[a].chunk.chunk_index < entries_[b].chunk.chunk_index;
        });
        for (std::size_t s : slots) out.push_back(entries_[s].chunk);
        return out;
    }
    auto it = by_page_.find(target_url);
    if (it == by_page_.end()) return out;
    for (std::size_t s : it->second) out.push_back(entries_[s].chunk);
    return out;
}

const Chunk* CorpusIndex::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second].chunk;
}

const EmbeddingVector* CorpusIndex::embedding_of(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second].embedding;
}

std::vector<std::string> CorpusIndex::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.chunk.id);
    return out;
}

void CorpusIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw LoadError("cannot open index file for writing: " + path);
    json header;
    header["format_version"] = header_.format_version;
    header["embedder"] = header_.embedder;
    header["dimension"] = header_.dimension;
    out << header.dump() << "\n";
    for (const auto& e : entries_) out << chunk_to_json(e.chunk, e.embedding).dump() << "\n";
    if (!out) throw LoadError("failed while writing index file: " + path);
}

CorpusIndex CorpusIndex::load(const std::string& path,
                              const std::optional<std::string>& expected_embedder) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("index file does not exist or is unreadable: " + path);
    std::string line;
    if (!std::getline(in, line)) throw LoadError("index file is empty: " + path, "format_version");

    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw LoadError("corrupt index header: " + std::string(e.what()), "format_version");
    }
    if (!header.contains("format_version") || !header["format_version"].is_number_integer())
        throw LoadError("index header is missing format_version", "format_version");
    const int version = header["format_version"].get<int>();
    if (version != kFormatVersion)
        throw LoadError("index format_version " + std::to_string(version) +
                            " is not the supported version " + std::to_string(kFormatVersion),
                        "format_version");
    if (!header.contains("embedder") || !header.contains("dimension"))
        throw LoadError("index header is missing embedder or dimension", "embedder");
    const std::string embedder = header["embedder"].get<std::string>();
    if (expected_embedder && *expected_embedder != embedder)
        throw LoadError("index was built with embedder '" + embedder + "', expected '" +
                            *expected_embedder + "'",
                        "embedder");

    CorpusIndex index(embedder, header["dimension"].get<int>());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
            auto [chunk, vec] = chunk_from_json(record);
            if (static_cast<int>(vec.size()) != index.header_.dimension)
                throw LoadError("record at line " + std::to_string(line_no) + " has dimension " +
                                    std::to_string(vec.size()) + ", header says " +
                                    std::to_string(index.header_.dimension),
                                "dimension");
            if (index.by_id_.count(chunk.id))
                throw LoadError("duplicate chunk id at line " + std::to_string(line_no) + ": " +
                                    chunk.id,
                                "id");
            index.upsert({{std::move(chunk), std::move(vec)}});
        } catch (const json::exception& e) {
            throw LoadError("corrupt index record at line " + std::to_string(line_no) + ": " +
                            e.what());
        }
    }
    return index;
}

}  // namespace larag

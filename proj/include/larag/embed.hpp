#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <vector>

namespace larag {

// All embedders emit unit-normalized vectors of a fixed dimension.
using EmbeddingVector = std::vector<float>;

// Dot product of two unit vectors, accumulated in a fixed order so that
// cosine(a, b) == cosine(b, a) exactly. Throws std::invalid_argument on a
// dimension mismatch (programming error).
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

class Embedder {
public:
    virtual ~Embedder() = default;

    // Identifier recorded in index headers; indexes built with one embedder
    // refuse vectors from another.
    virtual std::string id() const = 0;
    virtual int dimension() const = 0;

    // Precondition: text is non-empty after trimming. Deterministic per
    // implementation: identical text yields an identical unit vector.
    virtual EmbeddingVector embed(const std::string& text) = 0;

    virtual std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts);
};

// Deterministic hashed bag-of-words embedder: lowercase, split on
// non-alphanumerics, hash each token into a signed-count vector (independent
// seeds for bucket and sign), then L2-normalize. A pure function of the text
// bytes, stable across runs and platforms.
class OfflineEmbedder : public Embedder {
public:
    static constexpr int kDimension = 256;

    std::string id() const override { return "offline-hash-256"; }
    int dimension() const override { return kDimension; }
    EmbeddingVector embed(const std::string& text) override;
};

struct RemoteEmbedderConfig {
    std::string endpoint;                 // scheme://host[:port]
    std::string path = "/v1/embeddings";  // embeddings-API convention
    std::string model;
    std::string api_key;
    int dimension = 0;  // 0 = adopt the first response's dimension
    int timeout_seconds = 30;
    int max_batch = 64;
    int max_retries = 3;
};

// HTTP client for a hosted embeddings API: input array in, float vectors
// out. Batches up to max_batch texts per request and retries transient
// failures (connect errors, 408/429/5xx) with exponential backoff. Returned
// vectors are re-normalized to unit length.
class RemoteEmbedder : public Embedder {
public:
    explicit RemoteEmbedder(RemoteEmbedderConfig config);

    std::string id() const override;
    int dimension() const override { return dimension_.load(); }
    EmbeddingVector embed(const std::string& text) override;
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;

private:
    RemoteEmbedderConfig config_;
    std::atomic<int> dimension_{0};  // 0 until the first response; embed is concurrency-safe
};

std::unique_ptr<Embedder> make_offline_embedder();

}  // namespace larag

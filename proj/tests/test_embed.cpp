#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "larag/embed.hpp"

using namespace larag;

namespace {

double norm_of(const EmbeddingVector& v) {
    double s = 0.0;
    for (float x : v) s += static_cast<double>(x) * x;
    return std::sqrt(s);
}

// Deterministic distinct strings built from a small vocabulary, shaped like
// the corpus text the embedder actually sees.
std::vector<std::string> corpus_like_strings(std::size_t count) {
    static const std::vector<std::string> vocab = {
        "import",  "export",   "dataflow",  "task",      "connection", "schedule",
        "widget",  "dashboard", "variable", "repository", "permission", "vault",
        "filter",  "transform", "column",   "table",     "chunk",      "anchor",
        "index",   "query",     "engine",   "canvas",    "alert",      "macro"};
    std::mt19937_64 rng(1234);
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string s;
        const std::size_t words = 4 + rng() % 8;
        for (std::size_t w = 0; w < words; ++w) {
            if (w) s += " ";
            s += vocab[rng() % vocab.size()];
        }
        s += " " + std::to_string(i);  // guarantees distinctness
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("cosine of a vector with itself is one, orthogonal is zero") {
    const EmbeddingVector a = {1.0f, 0.0f};
    const EmbeddingVector b = {0.0f, 1.0f};
    CHECK(cosine(a, a) == doctest::Approx(1.0));
    CHECK(cosine(a, b) == doctest::Approx(0.0));
}

TEST_CASE("cosine matches the direct dot product") {
    const EmbeddingVector a = {0.6f, 0.8f};
    const EmbeddingVector b = {0.8f, 0.6f};
    const double direct = static_cast<double>(a[0]) * b[0] + static_cast<double>(a[1]) * b[1];
    CHECK(cosine(a, b) == direct);
    CHECK(cosine(a, b) == doctest::Approx(0.96));
}

TEST_CASE("cosine is exactly symmetric and throws on dimension mismatch") {
    OfflineEmbedder embedder;
    const auto a = embedder.embed("import a table from the database");
    const auto b = embedder.embed("export the dashboard as a report");
    CHECK(cosine(a, b) == cosine(b, a));  // bitwise equality, fixed order
    CHECK_THROWS_AS(cosine(a, EmbeddingVector{1.0f}), std::invalid_argument);
}

TEST_CASE("offline embedder is deterministic and unit-norm") {
    OfflineEmbedder embedder;
    const auto once = embedder.embed("Meridian Flow executes dataflows");
    const auto twice = embedder.embed("Meridian Flow executes dataflows");
    CHECK(once == twice);
    CHECK(norm_of(once) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(static_cast<int>(once.size()) == embedder.dimension());
}

TEST_CASE("offline embedder rejects empty text") {
    OfflineEmbedder embedder;
    CHECK_THROWS_AS(embedder.embed(""), std::invalid_argument);
    CHECK_THROWS_AS(embedder.embed("   \n\t "), std::invalid_argument);
}

TEST_CASE("offline embedder is order-insensitive at the bag level") {
    OfflineEmbedder embedder;
    CHECK(embedder.embed("import the table") == embedder.embed("table the import"));
    CHECK(embedder.embed("Import, the... TABLE!") == embedder.embed("import the table"));
}

TEST_CASE("unit norm and bounded cosine hold over random strings") {
    OfflineEmbedder embedder;
    const auto strings = corpus_like_strings(60);
    std::vector<EmbeddingVector> vecs;
    for (const auto& s : strings) {
        vecs.push_back(embedder.embed(s));
        CHECK(norm_of(vecs.back()) == doctest::Approx(1.0).epsilon(1e-6));
    }
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
            CHECK(std::abs(cosine(vecs[i], vecs[j])) <= 1.0 + 1e-9);
}

TEST_CASE("one thousand distinct strings rarely collide in cosine") {
    OfflineEmbedder embedder;
    const auto strings = corpus_like_strings(1000);
    std::vector<EmbeddingVector> vecs;
    vecs.reserve(strings.size());
    for (const auto& s : strings) vecs.push_back(embedder.embed(s));

    std::size_t total = 0, high = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            ++total;
            if (cosine(vecs[i], vecs[j]) >= 0.99) ++high;
        }
    }
    // At least 99% of pairs stay well separated.
    CHECK(static_cast<double>(high) <= 0.01 * static_cast<double>(total));
}

TEST_CASE("embed is safe and identical across concurrent workers") {
    OfflineEmbedder embedder;
    const std::string text = "connection manager credentials vault rotation";
    const EmbeddingVector expected = embedder.embed(text);
    std::vector<std::thread> workers;
    std::vector<EmbeddingVector> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            for (int i = 0; i < 50; ++i) results[t] = embedder.embed(text);
        });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("degenerate token cancellation still yields a unit vector") {
    OfflineEmbedder embedder;
    // Hash-sign cancellation cannot be provoked reliably from here, but
    // punctuation-only text (no tokens) exercises the same fallback path.
    const auto v = embedder.embed("!!! ???");
    CHECK(norm_of(v) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(v == embedder.embed("!!! ???"));
}

#include "larag/embed.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace larag {
namespace {

// FNV-1a, seeded. std::hash is not stable across platforms; this is.
std::uint64_t fnv1a(const std::string& token, std::uint64_t seed) {
    std::uint64_t h = 14695981039346656037ULL ^ seed;
    for (unsigned char c : token) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t kBucketSeed = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kSignSeed = 0xC2B2AE3D27D4EB4FULL;

}  // namespace

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

std::vector<EmbeddingVector> Embedder::embed_batch(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed(t));
    return out;
}

EmbeddingVector OfflineEmbedder::embed(const std::string& text) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw std::invalid_argument("embed: text is empty after trimming");

    std::vector<double> acc(kDimension, 0.0);
    std::string token;
    bool any_token = false;
    auto flush = [&] {
        if (token.empty()) return;
        const std::size_t bucket = fnv1a(token, kBucketSeed) % kDimension;
        const double sign = (fnv1a(token, kSignSeed) & 1u) ? 1.0 : -1.0;
        acc[bucket] += sign;
        any_token = true;
        token.clear();
    };
    for (unsigned char c : text) {
        if (std::isalnum(c))
            token.push_back(static_cast<char>(std::tolower(c)));
        else
            flush();
    }
    flush();

    double norm_sq = 0.0;
    for (double v : acc) norm_sq += v * v;
    if (!any_token || norm_sq == 0.0) {
        // Tokens cancelled exactly (or the text had none): fall back to a
        // deterministic basis vector so the unit-norm contract still holds.
        std::uint64_t byte_sum = 0;
        for (unsigned char c : text) byte_sum += c;
        std::fill(acc.begin(), acc.end(), 0.0);
        acc[byte_sum % kDimension] = 1.0;
        norm_sq = 1.0;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    EmbeddingVector out(kDimension);
    for (int i = 0; i < kDimension; ++i) out[i] = static_cast<float>(acc[i] * inv);
    return out;
}

std::unique_ptr<Embedder> make_offline_embedder() { return std::make_unique<OfflineEmbedder>(); }

}  // namespace larag

#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace larag {

struct GenerationResult {
    std::string answer;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    long total_tokens = 0;  // always prompt_tokens + completion_tokens
    double latency_seconds = 0.0;
    bool tokens_estimated = false;  // true when the counts are heuristic, not provider-reported
};

// Heuristic token count: ceil(bytes / 4). Only used when the provider
// reports no usage; results carrying it are flagged as estimates.
long count_tokens(const std::string& text);

class Generator {
public:
    virtual ~Generator() = default;

    // Precondition: prompt non-empty.
    virtual GenerationResult generate(const std::string& prompt) = 0;

    // Deterministic generators report synthetic latency so benchmark output
    // is byte-stable; wall-clock timing is reserved for real backends.
    virtual bool deterministic() const { return false; }
};

// Extractive stand-in for a hosted model: returns the first three sentences
// of the context block sharing the most content words with the question. A
// pure function of the prompt, giving end-to-end tests meaningful (nonzero,
// non-perfect) downstream scores.
class MockGenerator : public Generator {
public:
    GenerationResult generate(const std::string& prompt) override;
    bool deterministic() const override { return true; }
};

struct RemoteGeneratorConfig {
    std::string endpoint;                       // scheme://host[:port]
    std::string path = "/v1/chat/completions";  // chat-completions convention
    std::string model;
    std::string api_key;
    double temperature = 0.0;
    int timeout_seconds = 30;
    int max_retries = 3;
};

// Chat-completions HTTP client. Provider-reported token usage always
// overrides the heuristic; refusals come back verbatim as the answer.
class RemoteGenerator : public Generator {
public:
    explicit RemoteGenerator(RemoteGeneratorConfig config);
    GenerationResult generate(const std::string& prompt) override;

private:
    RemoteGeneratorConfig config_;
};

std::unique_ptr<Generator> make_mock_generator();

}  // namespace larag

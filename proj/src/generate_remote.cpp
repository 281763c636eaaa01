#include <chrono>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "larag/errors.hpp"
#include "larag/generate.hpp"
#include "remote_common.hpp"

namespace larag {

RemoteGenerator::RemoteGenerator(RemoteGeneratorConfig config) : config_(std::move(config)) {}

GenerationResult RemoteGenerator::generate(const std::string& prompt) {
    if (prompt.empty()) throw std::invalid_argument("generate: prompt is empty");

    nlohmann::json request;
    request["model"] = config_.model;
    request["temperature"] = config_.temperature;
    request["messages"] = nlohmann::json::array({
        nlohmann::json{{"role", "user"}, {"content", prompt}},
    });

    const auto started = std::chrono::steady_clock::now();
    const std::string body =
        detail::post_json_with_retries(config_.endpoint, config_.path, config_.api_key,
                                       config_.timeout_seconds, config_.max_retries,
                                       request.dump());
    const auto elapsed = std::chrono::steady_clock::now() - started;

    nlohmann::json response;
    try {
        response = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw TransportError(std::string("chat API returned malformed JSON: ") + e.what(), 1, 200);
    }

    GenerationResult result;
    try {
        // Refusals arrive as ordinary content and are passed through verbatim.
        result.answer = response.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw TransportError(std::string("chat API response has no message content: ") + e.what(),
                             1, 200);
    }
    result.latency_seconds = std::chrono::duration<double>(elapsed).count();

    if (response.contains("usage") && response["usage"].is_object() &&
        response["usage"].contains("prompt_tokens") &&
        response["usage"].contains("completion_tokens")) {
        const auto& usage = response["usage"];
        result.prompt_tokens = usage["prompt_tokens"].get<long>();
        result.completion_tokens = usage["completion_tokens"].get<long>();
        result.tokens_estimated = false;
    } else {
        result.prompt_tokens = count_tokens(prompt);
        result.completion_tokens = count_tokens(result.answer);
        result.tokens_estimated = true;
    }
    result.total_tokens = result.prompt_tokens + result.completion_tokens;
    return result;
}

}  // namespace larag

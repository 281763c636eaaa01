#pragma once

// Shared HTTP plumbing for the remote embedder and generator clients.

#include <chrono>
#include <string>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "larag/errors.hpp"

namespace larag::detail {

inline bool transient_status(int status) {
    return status == 408 || status == 429 || (status >= 500 && status < 600);
}

// POST a JSON body; retry transient failures with exponential backoff.
// Throws TransportError carrying the attempt count and last HTTP status.
inline std::string post_json_with_retries(const std::string& endpoint, const std::string& path,
                                          const std::string& api_key, int timeout_seconds,
                                          int max_retries, const std::string& body) {
    int last_status = 0;
    int attempts = 0;
    std::string last_error;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(100) * (1 << (attempt - 1)));
        ++attempts;
        httplib::Client client(endpoint);
        client.set_connection_timeout(timeout_seconds, 0);
        client.set_read_timeout(timeout_seconds, 0);
        client.set_write_timeout(timeout_seconds, 0);
        httplib::Headers headers;
        if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
        auto res = client.Post(path, headers, body, "application/json");
        if (!res) {
            last_status = 0;
            last_error = "connection failed: " + httplib::to_string(res.error());
            continue;
        }
        last_status = res->status;
        if (res->status >= 200 && res->status < 300) return res->body;
        last_error = "HTTP " + std::to_string(res->status) + ": " + res->body;
        if (!transient_status(res->status)) break;
    }
    throw TransportError("request to " + endpoint + path + " failed (" + last_error + ")",
                         attempts, last_status);
}

}  // namespace larag::detail

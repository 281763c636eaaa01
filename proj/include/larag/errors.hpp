#pragma once

#include <stdexcept>
#include <string>

namespace larag {

// Base class for every failure raised by the pipeline.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Document could not be parsed at all (undecodable bytes, unreadable file).
class IngestError : public Error {
public:
    using Error::Error;
};

// Batch rejected by the index (dimension or embedder mismatch).
class IndexError : public Error {
public:
    using Error::Error;
};

// Persistence failure; `field` names the offending header field when known.
class LoadError : public Error {
public:
    LoadError(const std::string& message, std::string field = "")
        : Error(message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class RetrievalError : public Error {
public:
    using Error::Error;
};

// Remote embedder/generator failure, carrying retry metadata.
class TransportError : public Error {
public:
    TransportError(const std::string& message, int attempts, int last_status)
        : Error(message), attempts_(attempts), last_status_(last_status) {}
    int attempts() const { return attempts_; }
    int last_status() const { return last_status_; }  // 0 when no HTTP response arrived

private:
    int attempts_ = 0;
    int last_status_ = 0;
};

class ScoringError : public Error {
public:
    using Error::Error;
};

// Pearson correlation undefined (constant series or too few points).
class CorrelationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace larag

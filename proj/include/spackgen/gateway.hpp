#pragma once

#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace spackgen {

struct TokenUsage {
    long prompt_tokens = 0;
    long completion_tokens = 0;
    bool approximate = false;  // estimated from character counts
};

struct CompletionResult {
    std::string text;
    TokenUsage usage;
    double latency_s = 0.0;
};

// One scripted response: fires when `pattern` matches the prompt text
// (substring, or ECMAScript regex when is_regex). An empty pattern matches
// everything. `once` entries are consumed after firing.
struct ScriptEntry {
    std::string pattern;
    std::string response;
    bool once = false;
    bool is_regex = false;
};

struct ScriptState {
    std::vector<ScriptEntry> entries;
    std::vector<bool> used;
    std::mutex mutex;
};

struct ModelParams {
    double temperature = 0.0;  // reproducibility default
    int max_tokens = 4096;
    int timeout_ms = 120000;
    int retries = 3;
    int backoff_ms = 2000;
    int concurrency = 4;
};

enum class BackendKind { remote_http, scripted_mock };

struct ModelHandle {
    BackendKind kind = BackendKind::scripted_mock;
    std::string endpoint;     // http(s)://host[:port]/path for remote handles
    std::string model_id;
    std::string api_key_env;  // name of the env var holding the credential
    ModelParams params;
    std::shared_ptr<ScriptState> script;  // scripted_mock only
};

ModelHandle make_scripted_handle(std::vector<ScriptEntry> entries,
                                 const std::string& model_id = "scripted");

// Removes a leading/trailing code-fence line pair when present; idempotent.
std::string strip_code_fences(std::string_view text);

// Embedding endpoint contract. Implementations must return one vector per
// input with a constant dimension per instance.
class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::string id() const = 0;
    virtual std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) = 0;
};

// Deterministic local embedder: vectors derived from a content hash.
// Identical texts map to identical vectors; empty inputs map to the zero
// vector and are counted.
class HashEmbedder : public Embedder {
public:
    explicit HashEmbedder(int dim = 64) : dim_(dim) {}
    std::string id() const override { return "hash-" + std::to_string(dim_); }
    std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) override;
    int empty_inputs_flagged = 0;

private:
    int dim_;
};

// Mediates chat-completion and embedding requests: scripted backends answer
// locally, remote handles go over JSON-over-HTTP with retry on transport
// errors and retryable statuses. Thread-safe; per-endpoint concurrency is
// capped by ModelParams::concurrency.
class Gateway {
public:
    CompletionResult complete_text(const ModelHandle& handle, const std::string& system_text,
                                   const std::string& user_text);
    std::vector<std::vector<float>> embed(const ModelHandle& handle,
                                          const std::vector<std::string>& texts);

private:
    struct Gate {
        int active = 0;
        std::condition_variable cv;
    };
    class GateLease;
    GateLease acquire(const std::string& endpoint, int limit);

    std::mutex gates_mutex_;
    std::map<std::string, std::unique_ptr<Gate>> gates_;
};

// Embedder backed by a gateway handle's embedding endpoint.
class HttpEmbedder : public Embedder {
public:
    HttpEmbedder(Gateway& gateway, ModelHandle handle)
        : gateway_(gateway), handle_(std::move(handle)) {}
    std::string id() const override { return "http-" + handle_.model_id; }
    std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) override {
        return gateway_.embed(handle_, texts);
    }

private:
    Gateway& gateway_;
    ModelHandle handle_;
};

}  // namespace spackgen

#include "spackgen/gateway.hpp"

#include <chrono>
#include <cstdlib>
#include <regex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "spackgen/errors.hpp"
#include "spackgen/util.hpp"

namespace spackgen {
namespace {

using nlohmann::json;

struct ParsedUrl {
    std::string base;  // scheme://host[:port]
    std::string path;
};

ParsedUrl parse_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw GatewayError("malformed endpoint URL: " + url);
    auto path_begin = url.find('/', scheme_end + 3);
    if (path_begin == std::string::npos) return {url, "/"};
    return {url.substr(0, path_begin), url.substr(path_begin)};
}

bool retryable_status(int status) {
    return status == 429 || (status >= 500 && status < 600);
}

long estimate_tokens(size_t chars) {
    return static_cast<long>(chars / 4);
}

CompletionResult run_scripted(const ModelHandle& handle, const std::string& system_text,
                              const std::string& user_text) {
    if (!handle.script) throw GatewayError("scripted handle has no script");
    std::lock_guard<std::mutex> lock(handle.script->mutex);
    auto& st = *handle.script;
    if (st.used.size() != st.entries.size()) st.used.assign(st.entries.size(), false);
    for (size_t i = 0; i < st.entries.size(); ++i) {
        const auto& entry = st.entries[i];
        if (entry.once && st.used[i]) continue;
        bool matches;
        if (entry.pattern.empty()) {
            matches = true;
        } else if (entry.is_regex) {
            matches = std::regex_search(user_text, std::regex(entry.pattern));
        } else {
            matches = user_text.find(entry.pattern) != std::string::npos;
        }
        if (!matches) continue;
        st.used[i] = true;
        CompletionResult result;
        result.text = strip_code_fences(entry.response);
        result.usage.prompt_tokens = estimate_tokens(system_text.size() + user_text.size());
        result.usage.completion_tokens = estimate_tokens(result.text.size());
        result.usage.approximate = true;
        return result;
    }
    throw GatewayError("scripted backend: no entry matches the prompt");
}

}  // namespace

ModelHandle make_scripted_handle(std::vector<ScriptEntry> entries, const std::string& model_id) {
    ModelHandle handle;
    handle.kind = BackendKind::scripted_mock;
    handle.model_id = model_id;
    handle.script = std::make_shared<ScriptState>();
    handle.script->entries = std::move(entries);
    return handle;
}

std::string strip_code_fences(std::string_view text) {
    std::string s = trim(text);
    if (!starts_with(s, "```")) return s;
    auto first_nl = s.find('\n');
    if (first_nl == std::string::npos) return "";
    std::string body = s.substr(first_nl + 1);
    auto last_fence = body.rfind("```");
    if (last_fence != std::string::npos && trim(body.substr(last_fence + 3)).empty())
        body = body.substr(0, last_fence);
    return trim(body);
}

std::vector<std::vector<float>> HashEmbedder::embed(const std::vector<std::string>& texts) {
    std::vector<std::vector<float>> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        std::vector<float> v(static_cast<size_t>(dim_), 0.0f);
        if (text.empty()) {
            empty_inputs_flagged++;
            out.push_back(std::move(v));
            continue;
        }
        double norm = 0.0;
        for (int i = 0; i < dim_; ++i) {
            std::uint64_t h = fnv1a(text, 0x9e3779b97f4a7c15ull + std::uint64_t(i));
            // map to [-1, 1)
            v[static_cast<size_t>(i)] =
                float(double(h >> 11) / double(1ull << 53) * 2.0 - 1.0);
            norm += double(v[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
        }
        norm = std::sqrt(norm);
        if (norm > 0)
            for (auto& x : v) x = float(x / norm);
        out.push_back(std::move(v));
    }
    return out;
}

class Gateway::GateLease {
public:
    GateLease(Gateway* owner, Gate* gate, std::mutex* mutex)
        : owner_(owner), gate_(gate), mutex_(mutex) {}
    GateLease(GateLease&& o) noexcept : owner_(o.owner_), gate_(o.gate_), mutex_(o.mutex_) {
        o.gate_ = nullptr;
    }
    ~GateLease() {
        if (!gate_) return;
        std::lock_guard<std::mutex> lock(*mutex_);
        gate_->active--;
        gate_->cv.notify_one();
    }

private:
    Gateway* owner_;
    Gate* gate_;
    std::mutex* mutex_;
};

Gateway::GateLease Gateway::acquire(const std::string& endpoint, int limit) {
    std::unique_lock<std::mutex> lock(gates_mutex_);
    auto& gate = gates_[endpoint];
    if (!gate) gate = std::make_unique<Gate>();
    gate->cv.wait(lock, [&] { return gate->active < std::max(limit, 1); });
    gate->active++;
    return GateLease(this, gate.get(), &gates_mutex_);
}

CompletionResult Gateway::complete_text(const ModelHandle& handle,
                                        const std::string& system_text,
                                        const std::string& user_text) {
    auto start = std::chrono::steady_clock::now();
    if (handle.kind == BackendKind::scripted_mock) {
        CompletionResult r = run_scripted(handle, system_text, user_text);
        r.latency_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    if (handle.endpoint.empty()) throw GatewayError("remote handle has no endpoint");

    auto lease = acquire(handle.endpoint, handle.params.concurrency);
    ParsedUrl url = parse_url(handle.endpoint);

    json body = {
        {"model", handle.model_id},
        {"temperature", handle.params.temperature},
        {"max_tokens", handle.params.max_tokens},
        {"messages",
         json::array({json{{"role", "system"}, {"content", system_text}},
                      json{{"role", "user"}, {"content", user_text}}})},
    };

    std::string error;
    for (int attempt = 1; attempt <= std::max(handle.params.retries, 1); ++attempt) {
        if (attempt > 1) {
            int delay = handle.params.backoff_ms << (attempt - 2);
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
        }
        httplib::Client client(url.base);
        client.set_read_timeout(handle.params.timeout_ms / 1000,
                                (handle.params.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        if (!handle.api_key_env.empty()) {
            const char* key = std::getenv(handle.api_key_env.c_str());
            if (key) headers.emplace("Authorization", std::string("Bearer ") + key);
        }
        auto res = client.Post(url.path, headers, body.dump(), "application/json");
        if (!res) {
            error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            error = "HTTP " + std::to_string(res->status);
            if (retryable_status(res->status)) continue;
            throw GatewayError("completion request failed: " + error);
        }
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded()) throw GatewayError("completion endpoint returned invalid JSON");
        CompletionResult result;
        try {
            result.text = strip_code_fences(
                reply.at("choices").at(0).at("message").at("content").get<std::string>());
        } catch (const json::exception& e) {
            throw GatewayError(std::string("unexpected completion response shape: ") + e.what());
        }
        if (reply.contains("usage")) {
            result.usage.prompt_tokens = reply["usage"].value("prompt_tokens", 0L);
            result.usage.completion_tokens = reply["usage"].value("completion_tokens", 0L);
        } else {
            result.usage.prompt_tokens = estimate_tokens(system_text.size() + user_text.size());
            result.usage.completion_tokens = estimate_tokens(result.text.size());
            result.usage.approximate = true;
        }
        result.latency_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    throw GatewayError("completion request failed after retries: " + error);
}

std::vector<std::vector<float>> Gateway::embed(const ModelHandle& handle,
                                               const std::vector<std::string>& texts) {
    if (texts.empty()) throw GatewayError("embed called with no inputs");
    if (handle.kind == BackendKind::scripted_mock)
        throw GatewayError("scripted handles do not serve embeddings; use an Embedder");
    auto lease = acquire(handle.endpoint, handle.params.concurrency);
    ParsedUrl url = parse_url(handle.endpoint);
    json body = {{"model", handle.model_id}, {"input", texts}};

    std::string error;
    for (int attempt = 1; attempt <= std::max(handle.params.retries, 1); ++attempt) {
        if (attempt > 1) {
            int delay = handle.params.backoff_ms << (attempt - 2);
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
        }
        httplib::Client client(url.base);
        client.set_read_timeout(handle.params.timeout_ms / 1000,
                                (handle.params.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        if (!handle.api_key_env.empty()) {
            const char* key = std::getenv(handle.api_key_env.c_str());
            if (key) headers.emplace("Authorization", std::string("Bearer ") + key);
        }
        auto res = client.Post(url.path, headers, body.dump(), "application/json");
        if (!res) {
            error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            error = "HTTP " + std::to_string(res->status);
            if (retryable_status(res->status)) continue;
            throw GatewayError("embedding request failed: " + error);
        }
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded()) throw GatewayError("embedding endpoint returned invalid JSON");
        std::vector<std::vector<float>> out;
        try {
            for (const auto& item : reply.at("data"))
                out.push_back(item.at("embedding").get<std::vector<float>>());
        } catch (const json::exception& e) {
            throw GatewayError(std::string("unexpected embedding response shape: ") + e.what());
        }
        if (out.size() != texts.size())
            throw GatewayError("embedding endpoint returned wrong item count");
        for (const auto& v : out)
            if (v.size() != out.front().size())
                throw DimensionMismatchError("embedding endpoint returned mixed dimensions");
        return out;
    }
    throw GatewayError("embedding request failed after retries: " + error);
}

}  // namespace spackgen

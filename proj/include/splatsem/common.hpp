// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdarg>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace splatsem {

// Bad inputs, configs, or file contents. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failures during computation (non-finite losses, I/O mid-run). CLI exit code 3.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from the SPLATSEM_LOG env var (error|warn|info|debug), default warn.
LogLevel log_level();

void log_msg(LogLevel level, const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 2, 3)))
#endif
    ;

#define SPLATSEM_LOG_AT(lvl, ...)                         \
    do {                                                  \
        if (::splatsem::log_level() >= lvl)               \
            ::splatsem::log_msg(lvl, __VA_ARGS__);        \
    } while (0)

#define LOG_ERROR(...) SPLATSEM_LOG_AT(::splatsem::LogLevel::Error, __VA_ARGS__)
#define LOG_WARN(...) SPLATSEM_LOG_AT(::splatsem::LogLevel::Warn, __VA_ARGS__)
#define LOG_INFO(...) SPLATSEM_LOG_AT(::splatsem::LogLevel::Info, __VA_ARGS__)
#define LOG_DEBUG(...) SPLATSEM_LOG_AT(::splatsem::LogLevel::Debug, __VA_ARGS__)

std::string format_str(const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 1, 2)))
#endif
    ;

// Deterministic seed derivation for independent RNG streams.
constexpr uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// FNV-1a 64-bit, used for artifact digests in run manifests.
constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
uint64_t fnv1a64(const void* data, size_t n, uint64_t h = kFnvOffset);
uint64_t fnv1a64_file(const std::string& path);
std::string hex64(uint64_t v);

}  // namespace splatsem

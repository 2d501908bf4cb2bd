// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "splatsem/common.hpp"

// Little-endian binary stream helpers shared by the container formats
// (SSFF, SSEG, SSTR, SSFM, SSCK, SSPT, SSVE, SSGL). The build targets
// little-endian hosts; values are memcpy'd through fixed-width types.

namespace splatsem {

template <typename T>
void write_pod(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in, const char* what) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw ValidationError(std::string("unexpected end of file while reading ") + what);
    return v;
}

template <typename T>
void write_pod_array(std::ostream& out, const T* data, size_t n) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * sizeof(T)));
}

template <typename T>
void read_pod_array(std::istream& in, T* data, size_t n, const char* what) {
    in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n * sizeof(T)));
    if (!in) throw ValidationError(std::string("unexpected end of file while reading ") + what);
}

inline void write_magic(std::ostream& out, const char magic[4]) {
    out.write(magic, 4);
}

inline void expect_magic(std::istream& in, const char magic[4], const std::string& path) {
    char buf[4] = {};
    in.read(buf, 4);
    if (!in || std::memcmp(buf, magic, 4) != 0)
        throw ValidationError("bad magic in " + path + " (expected " + std::string(magic, 4) + ")");
}

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, size_t n);

}  // namespace splatsem

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "krylov/core/errors.hpp"
#include "krylov/core/types.hpp"

namespace krylov::experiments {

inline uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// One CSV curve: header `step,time,value[,stderr]`, floats at 17 significant
/// digits so reruns are byte-stable.
inline std::string csv_series(const RealVector& times, const RealVector& values,
                              const RealVector* stderrs = nullptr) {
    std::string out = stderrs ? "step,time,value,stderr\n" : "step,time,value\n";
    for (Eigen::Index k = 0; k < times.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_double(times(k));
        out += ',';
        out += format_double(values(k));
        if (stderrs) {
            out += ',';
            out += format_double((*stderrs)(k));
        }
        out += '\n';
    }
    return out;
}

/// Collects result files in memory; everything is flushed by a single writer
/// at the end of the run so parallel workers never touch the filesystem.
class ResultWriter {
public:
    explicit ResultWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

    void add(const std::string& name, std::string content) { files_[name] = std::move(content); }
    bool has(const std::string& name) const { return files_.count(name) > 0; }

    const std::filesystem::path& dir() const { return dir_; }
    const std::map<std::string, std::string>& files() const { return files_; }

    void flush() const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw io_error("cannot create output directory " + dir_.string());
        for (const auto& [name, content] : files_) {
            std::ofstream out(dir_ / name, std::ios::binary);
            if (!out) throw io_error("cannot open " + (dir_ / name).string() + " for writing");
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            if (!out) throw io_error("short write to " + (dir_ / name).string());
        }
    }

private:
    std::filesystem::path dir_;
    std::map<std::string, std::string> files_;
};

} // namespace krylov::experiments

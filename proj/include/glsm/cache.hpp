#pragma once

// Content-addressed result cache. Keys are SHA-256 digests of a canonical
// JSON job description; entries are written to a temp file then renamed.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

#include "glsm/hash.hpp"
#include "glsm/series.hpp"

namespace glsm {

inline constexpr const char* kEngineVersion = "glsm-engine/1.0";

struct JobKey {
  std::string hex;
  friend bool operator==(const JobKey& a, const JobKey& b) { return a.hex == b.hex; }
  friend bool operator!=(const JobKey& a, const JobKey& b) { return !(a == b); }
};

inline nlohmann::json insertions_json(const InsertionSet& ins) {
  nlohmann::json etas = nlohmann::json::array();
  for (std::size_t i = 0; i < ins.etas.size(); ++i) etas.push_back({{"name", ins.eta_names[i]}, {"character", ins.etas[i]}});
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : ins.items) items.push_back({{"name", it.name}, {"poly", it.poly.str(ins.eta_names)}});
  return {{"etas", etas}, {"items", items}};
}

/// `command` carries everything besides model, truncation and insertions that
/// shapes the output (subcommand, method, characters, output format).
inline JobKey job_key(const GLSMModel& m, const std::string& command, const Rational& q_bound, int t_order,
                      const InsertionSet& ins, const std::string& engine_version = kEngineVersion) {
  nlohmann::json j = {{"model", nlohmann::json::parse(canonical_model_text(m))},
                      {"command", command},
                      {"truncation", {{"q_bound", q_bound.get_str()}, {"t_order", t_order}}},
                      {"insertions", insertions_json(ins)},
                      {"engine", engine_version}};
  return {sha256_hex(j.dump())};
}

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// GLSM_CACHE_DIR, else $XDG_CACHE_HOME/glsm, else ~/.cache/glsm.
  static ResultCache from_environment() {
    if (const char* d = std::getenv("GLSM_CACHE_DIR"); d && *d) return ResultCache(d);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return ResultCache(std::filesystem::path(x) / "glsm");
    if (const char* h = std::getenv("HOME"); h && *h) return ResultCache(std::filesystem::path(h) / ".cache" / "glsm");
    return ResultCache(std::filesystem::temp_directory_path() / "glsm-cache");
  }

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_of(const JobKey& k) const { return dir_ / (k.hex + ".out"); }

  std::optional<std::string> lookup(const JobKey& k) const {
    std::ifstream in(path_of(k), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // A failed write leaves no entry behind; the result is still returned to the caller.
  bool store(const JobKey& k, const std::string& bytes) const {
    static std::atomic<unsigned long> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return false;
    auto tmp = dir_ / (k.hex + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return false;
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      out.flush();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return false;
      }
    }
    std::filesystem::rename(tmp, path_of(k), ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
    return true;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace glsm

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liekring/errors.hpp"

namespace liekring {

enum class ClaimVerdict { pass, fail, skipped };

inline std::string to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::pass: return "pass";
    case ClaimVerdict::fail: return "fail";
    case ClaimVerdict::skipped: return "skipped";
  }
  return "fail";
}

inline ClaimVerdict parse_verdict(const std::string& s) {
  if (s == "pass") return ClaimVerdict::pass;
  if (s == "fail") return ClaimVerdict::fail;
  if (s == "skipped") return ClaimVerdict::skipped;
  throw ParseError("unknown verdict '" + s + "'");
}

struct ClaimRecord {
  std::string id;
  std::string paper_location;
  ClaimVerdict verdict = ClaimVerdict::fail;
  std::optional<std::string> witness;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct Report {
  std::string version = "1.0.0";
  std::vector<ClaimRecord> claims;

  friend bool operator==(const Report&, const Report&) = default;

  /// Sorts by id and rejects duplicates.
  void normalize() {
    std::sort(claims.begin(), claims.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < claims.size(); ++i) {
      if (claims[i].id == claims[i - 1].id) throw InternalConsistencyError("duplicate claim id " + claims[i].id);
    }
  }

  bool all_passed() const {
    return std::none_of(claims.begin(), claims.end(), [](const auto& c) { return c.verdict == ClaimVerdict::fail; });
  }
};

inline void to_json(nlohmann::json& j, const ClaimRecord& c) {
  j = nlohmann::json{{"id", c.id},
                     {"paper_location", c.paper_location},
                     {"verdict", to_string(c.verdict)},
                     {"runtime_ms", c.runtime_ms}};
  j["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, ClaimRecord& c) {
  c.id = j.at("id").get<std::string>();
  c.paper_location = j.at("paper_location").get<std::string>();
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  const auto& w = j.at("witness");
  c.witness = w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>());
}

inline void to_json(nlohmann::json& j, const Report& r) { j = nlohmann::json{{"version", r.version}, {"claims", r.claims}}; }

inline void from_json(const nlohmann::json& j, Report& r) {
  r.version = j.at("version").get<std::string>();
  r.claims = j.at("claims").get<std::vector<ClaimRecord>>();
}

inline std::string serialize(const Report& r) { return nlohmann::json(r).dump(2); }

inline Report parse_report(const std::string& text) {
  try {
    return nlohmann::json::parse(text).get<Report>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

/// Copy with runtimes zeroed, for determinism comparisons.
inline Report without_runtimes(Report r) {
  for (auto& c : r.claims) c.runtime_ms = 0;
  return r;
}

}  // namespace liekring

#pragma once

#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <string>

#include <json.hpp>

#include "seqemb/catalog.hpp"
#include "seqemb/noncompact.hpp"
#include "seqemb/search.hpp"
#include "seqemb/sequence.hpp"

namespace seqemb {

using json = nlohmann::json;

inline json to_json(const FiniteSequence& a) { return json(a.values()); }

inline json to_json(const Interval& iv) { return json{{"lo", iv.lo}, {"hi", iv.hi}}; }

// Finite double or null (JSON has no infinities).
inline json json_number(double v) {
  if (std::isinf(v)) return nullptr;
  return v;
}

inline json to_json(const EmbeddingVerdict& v) {
  json j;
  j["embedded"] = v.embedded;
  j["constant"] = to_json(v.constant);
  j["exact_norm"] = v.exact_norm ? to_json(*v.exact_norm) : json(nullptr);
  j["theorem_tag"] = v.theorem_tag;
  j["maximally_noncompact"] =
      v.maximally_noncompact ? json(*v.maximally_noncompact) : json(nullptr);
  j["alpha_upper"] = v.alpha_upper ? json(*v.alpha_upper) : json(nullptr);
  j["norm_attained_limit_only"] = v.norm_attained_limit_only;
  return j;
}

inline json to_json(const SearchResult& r) {
  json j;
  j["best_value"] = r.best_value;
  j["iterations_used"] = r.iterations_used;
  j["family_tag"] = r.family_tag;
  std::size_t support = r.argmax.size();
  while (support > 0 && r.argmax[support - 1] == 0.0) --support;
  j["argmax_support"] = support;
  j["argmax_head"] = std::vector<double>(
      r.argmax.begin(), r.argmax.begin() + std::min<std::size_t>(support, 32));
  return j;
}

inline json to_json(const SpanBound& b) {
  return json{{"value", b.value}, {"source_case", b.source_case}};
}

inline json to_json(const CoverCertificate& c) {
  json centers = json::array();
  for (const FiniteSequence& y : c.centers) centers.push_back(to_json(y));
  return json{{"centers", centers},
              {"radius", c.radius},
              {"m", c.m},
              {"truncation", c.truncation},
              {"sigma", c.sigma},
              {"samples_checked", c.samples_checked},
              {"max_observed_distance", c.max_observed_distance},
              {"paper_case", c.paper_case},
              {"verification", c.verification}};
}

inline json to_json(const CoverRefutation& r) {
  return json{{"refuted", true},
              {"sample", to_json(r.sample)},
              {"min_distance", r.min_distance}};
}

inline json to_json(const WitnessReport& w) {
  return json{{"witness", to_json(w.witness)},
              {"min_distance_to_centers", json_number(w.min_distance_to_centers)},
              {"construction", w.construction},
              {"lambda", w.lambda},
              {"index_map", w.index_map},
              {"degenerate", w.degenerate}};
}

inline json to_json(const AlphaBracket& b) {
  json j{{"lo", b.lo}, {"hi", b.hi}, {"tag", b.tag}};
  if (b.tag == "weighted-example") {
    j["samples_checked"] = b.samples_checked;
    j["refutations"] = b.refutations;
    j["max_observed_distance"] = b.max_observed_distance;
  }
  return j;
}

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string utc_timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Every report embeds one of these; replaying the manifest reproduces the
// payload byte-for-byte apart from the timestamp.
inline json run_manifest(const std::string& command,
                         const std::map<std::string, std::string>& parameters,
                         std::uint64_t seed) {
  return json{{"command", command},
              {"parameters", parameters},
              {"seed", seed},
              {"tool_version", kToolVersion},
              {"timestamp", utc_timestamp_now()}};
}

}  // namespace seqemb

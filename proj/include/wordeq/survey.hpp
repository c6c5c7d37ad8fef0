#pragma once

#include <wordeq/certificates.hpp>
#include <wordeq/modp.hpp>
#include <wordeq/radical.hpp>
#include <wordeq/word.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wordeq {

using Json = nlohmann::ordered_json;

inline Json to_json(const Morphism& phi) {
  Json j;
  switch (phi.kind) {
    case Morphism::Kind::L: j["kind"] = "l"; break;
    case Morphism::Kind::R: j["kind"] = "r"; break;
    case Morphism::Kind::Pi:
      j["kind"] = "pi";
      j["m"] = phi.m;
      j["k"] = phi.k;
      break;
  }
  return j;
}

inline Json to_json(const DecompositionWitness& witness) {
  Json arr = Json::array();
  for (const auto& phi : witness.morphisms) arr.push_back(to_json(phi));
  return arr;
}

inline Json to_json(const ProfileEntry& entry) {
  Json j;
  j["p"] = entry.p;
  j["solvable"] = entry.solvable;
  if (entry.witness)
    j["witness"] = Json::array({entry.witness->first, entry.witness->second});
  else
    j["witness"] = nullptr;
  return j;
}

inline Json to_json(const PrimeProfile& profile) {
  Json j;
  j["word"] = render(profile.word);
  j["p_min"] = profile.p_min;
  j["p_max"] = profile.p_max;
  Json rows = Json::array();
  for (const auto& e : profile.entries) rows.push_back(to_json(e));
  j["rows"] = rows;
  j["exceptional"] = profile.exceptional;
  return j;
}

inline std::string profile_csv(const PrimeProfile& profile) {
  std::string out = "p,solvable,x,y\n";
  for (const auto& e : profile.entries) {
    out += std::to_string(e.p);
    out += e.solvable ? ",1," : ",0,";
    if (e.witness) out += std::to_string(e.witness->first) + "," + std::to_string(e.witness->second);
    else out += ",";
    out += "\n";
  }
  return out;
}

inline Json to_json(const CertificateReport& rep) {
  Json j;
  j["family"] = to_string(rep.family);
  j["params"] = rep.params;
  j["verdict"] = to_string(rep.verdict);
  Json ev = Json::object();
  for (const auto& [k, v] : rep.evidence) ev[k] = v;
  j["evidence"] = ev;
  j["summary"] = rep.summary;
  return j;
}

struct SurveyOptions {
  int max_len = 10;
  std::uint32_t p_min = 5;
  std::uint32_t p_max = 499;
  std::uint32_t small_prime_cutoff = 13;  // exceptional primes up to this are tolerated
  int length_budget = 12;
};

struct SurveyRow {
  Word word;
  long long length = 0;
  int x_count = 0;
  bool decomposable = false;
  std::optional<DecompositionWitness> witness;
  std::optional<PrimeProfile> profile;
  std::vector<std::uint32_t> beyond_cutoff;
  std::vector<CertificateReport> certificates;  // certified hits only

  enum class Verdict { Decomposable, EvidenceNotUniversal, Unresolved } verdict = Verdict::Unresolved;
};

inline std::string to_string(SurveyRow::Verdict v) {
  switch (v) {
    case SurveyRow::Verdict::Decomposable: return "decomposable";
    case SurveyRow::Verdict::EvidenceNotUniversal: return "evidence-not-universal";
    default: return "unresolved";
  }
}

// Classification of one word: a decomposition witness when one exists,
// otherwise the mod-p profile plus any applicable family certificates.
// Evidence-not-universal requires either no exceptional prime beyond the
// small-prime cutoff or a certified family; anything else stays unresolved.
inline SurveyRow classify_word(const Word& w, const SurveyOptions& opts) {
  SurveyRow row;
  row.word = w;
  row.length = w.length();
  row.x_count = w.x_count();
  if (auto witness = decompose(w)) {
    row.decomposable = true;
    row.witness = std::move(witness);
    row.verdict = SurveyRow::Verdict::Decomposable;
    return row;
  }
  row.profile = prime_profile(w, opts.p_min, opts.p_max);
  for (std::uint32_t p : row.profile->exceptional)
    if (p > opts.small_prime_cutoff) row.beyond_cutoff.push_back(p);
  for (const auto& match : match_families(w)) {
    CertificateReport rep = run_certificate(match);
    if (rep.certified()) row.certificates.push_back(std::move(rep));
  }
  const bool evidenced = row.beyond_cutoff.empty() || !row.certificates.empty();
  row.verdict = evidenced ? SurveyRow::Verdict::EvidenceNotUniversal : SurveyRow::Verdict::Unresolved;
  return row;
}

inline Json to_json(const SurveyRow& row) {
  Json j;
  j["word"] = render(row.word);
  j["length"] = row.length;
  j["n"] = row.x_count;
  j["decomposable"] = row.decomposable;
  if (row.witness) {
    j["witness"] = to_json(*row.witness);
    j["radical_solution"] = solve_decomposable(*row.witness).str();
  } else {
    j["witness"] = nullptr;
  }
  if (row.profile) {
    j["exceptional"] = row.profile->exceptional;
    j["beyond_cutoff"] = row.beyond_cutoff;
  }
  if (!row.certificates.empty()) {
    Json certs = Json::array();
    for (const auto& c : row.certificates)
      certs.push_back(to_string(c.family) + "(" + [&] {
        std::string s;
        for (std::size_t i = 0; i < c.params.size(); ++i) s += (i ? "," : "") + std::to_string(c.params[i]);
        return s;
      }() + ")");
    j["certificates"] = certs;
  }
  j["verdict"] = to_string(row.verdict);
  if (row.verdict == SurveyRow::Verdict::Unresolved && row.profile) j["profile"] = to_json(*row.profile);
  return j;
}

struct SurveyResult {
  SurveyOptions options;
  std::vector<SurveyRow> rows;
  int unresolved = 0;
};

// Canonical words (beginning and ending with X) of length <= max_len,
// classified in enumeration order. Deterministic for fixed options.
inline SurveyResult run_survey(const SurveyOptions& opts) {
  if (opts.max_len < 1 || opts.max_len > opts.length_budget)
    throw std::invalid_argument("run_survey: max_len must be within [1, length_budget]");
  SurveyResult result;
  result.options = opts;
  for (const Word& w : enumerate_words(opts.max_len, true)) {
    SurveyRow row = classify_word(w, opts);
    if (row.verdict == SurveyRow::Verdict::Unresolved) ++result.unresolved;
    result.rows.push_back(std::move(row));
  }
  return result;
}

inline std::string survey_jsonl(const SurveyResult& result) {
  std::string out;
  for (const auto& row : result.rows) {
    out += to_json(row).dump();
    out += "\n";
  }
  return out;
}

inline std::string survey_csv(const SurveyResult& result) {
  std::string out = "word,length,n,verdict,witness,exceptional_count,beyond_cutoff_count,certificates\n";
  for (const auto& row : result.rows) {
    out += render(row.word) + "," + std::to_string(row.length) + "," + std::to_string(row.x_count) + ",";
    out += to_string(row.verdict) + ",";
    if (row.witness) out += to_string(*row.witness);
    out += ",";
    out += row.profile ? std::to_string(row.profile->exceptional.size()) : "0";
    out += ",";
    out += std::to_string(row.beyond_cutoff.size());
    out += ",";
    for (std::size_t i = 0; i < row.certificates.size(); ++i)
      out += (i ? ";" : "") + to_string(row.certificates[i].family);
    out += "\n";
  }
  return out;
}

}  // namespace wordeq

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace asrqe {

// One speech segment. The reference transcript is optional: self-supervised
// training never needs it, evaluation does.
struct Utterance {
  std::string utterance_id;
  std::string language;  // ISO 639-1
  std::optional<std::string> speaker_id;
  std::optional<std::string> reference;
};

// One transcript from a named source. quality_tier is present for training
// corpora (1 = least compressed, best expected) and absent for blind engines.
struct Hypothesis {
  std::string utterance_id;
  std::string source;
  std::optional<int> quality_tier;
  std::string text;
};

// Engine identity used by scoring and evaluation. Tiered hypotheses act as
// pseudo-engines ("source:t<k>"), blind-engine hypotheses use the source name.
std::string engine_label(const Hypothesis& hyp);

class Corpus {
 public:
  // Adds or revalidates utterance metadata. Re-adding the same id with
  // different metadata throws ParseError.
  void upsert_utterance(const Utterance& utt);

  // Throws DuplicateKeyError when (utterance_id, source, quality_tier) is
  // already present, InvalidArgumentError when the utterance is unknown.
  void add_hypothesis(Hypothesis hyp);

  const std::vector<Utterance>& utterances() const { return utterances_; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }

  const Utterance* find_utterance(const std::string& utterance_id) const;
  std::vector<const Hypothesis*> hypotheses_of(const std::string& utterance_id) const;

  std::vector<std::string> languages() const;

 private:
  std::vector<Utterance> utterances_;
  std::vector<Hypothesis> hypotheses_;
  std::unordered_map<std::string, size_t> utterance_index_;
  std::unordered_map<std::string, std::vector<size_t>> hypotheses_by_utterance_;
  std::unordered_map<std::string, size_t> hypothesis_keys_;  // key -> line-ish ordinal
};

// Ordered (better, worse) pair with its WER-derived loss weight. The weight
// convention: the better hypothesis acts as the WER reference.
struct TrainingPair {
  std::string utterance_id;
  std::string better_text;
  std::string worse_text;
  double weight = 0.0;
  int tier_gap = 0;

  bool operator==(const TrainingPair&) const = default;
};

struct PairFileHeader {
  std::string weight_convention =
      "wer(reference=normalize(better_text), hypothesis=normalize(worse_text))";
  uint64_t seed = 0;
};

struct LoadReport {
  std::vector<std::string> warnings;
};

// Line-delimited JSON, one hypothesis per line with utterance metadata
// repeated. Duplicate (utterance, source, tier) keys and inconsistent
// metadata are rejected with the offending line number.
Corpus load_corpus(const std::string& path, LoadReport* report = nullptr);
void write_corpus(const Corpus& corpus, const std::string& path);

// Pair files carry a header line, then one pair per line. Loading verifies
// the schema and recomputes each weight from the stored texts.
void write_pairs(std::span<const TrainingPair> pairs, const std::string& path,
                 const PairFileHeader& header);
std::vector<TrainingPair> load_pairs(const std::string& path,
                                     PairFileHeader* header_out = nullptr);

}  // namespace asrqe

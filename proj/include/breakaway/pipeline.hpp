#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "breakaway/config.hpp"

namespace breakaway {

/// What every artifact records about the run that produced it.
struct Provenance {
  std::string hash;
  std::uint64_t seed = 0;
  std::string stage;

  /// Single-string form stored in binary checkpoints: `hash:seed:stage`.
  std::string encode() const;
  static Provenance decode(const std::string& s);
  nlohmann::json to_json() const;
  static Provenance from_json(const nlohmann::json& j);
  bool operator==(const Provenance&) const = default;
};

/// Thrown when an input artifact was produced under a different config.
class StaleArtifact : public Error {
 public:
  using Error::Error;
};

struct PipelineOptions {
  int workers = 1;
  bool force = false;
  std::ostream* log = nullptr;  // stage timings and provenance; silent when null
};

struct MorphologySets {
  std::vector<Morphology> training;
  std::vector<Morphology> held_out;
};

struct StudySummary {
  std::string study;
  double mean_a = 0.0, mean_b = 0.0, p = 1.0;
  int frozen_a = 0, frozen_b = 0;
  bool skipped = false;  // up to date on disk
};

inline const DestructMode kAllModes[] = {DestructMode::self_destruct, DestructMode::no_destruct,
                                         DestructMode::random_destruct};

/// Stage runner over one artifact directory. Each stage checks the
/// provenance of its inputs, skips outputs that are already current unless
/// forced, and writes through temporary files.
class Pipeline {
 public:
  Pipeline(ExperimentConfig cfg, PipelineOptions opt);

  const ExperimentConfig& config() const { return cfg_; }
  Provenance provenance(Stage s) const;

  void gen_morphs();
  void train_experts();
  void collect();
  void train_policy();
  StudySummary eval(const std::string& study);  // e1, e2 or e3
  /// Nonzero when a study contradicts the expected direction, or misses its
  /// alpha while significance is required.
  int gate(const StudySummary& s) const;

  /// One closed-loop episode of a trained policy, saved as a trajectory file.
  EpisodeStats run(DestructMode policy, const std::string& morphology_id, std::uint64_t episode_seed,
                   bool with_reset, std::string* written = nullptr);

  /// Self-checks plus a provenance cross-check of every artifact present.
  /// Returns the list of problems; empty means healthy.
  std::vector<std::string> validate() const;

  MorphologySets load_morphologies() const;

  std::string path(const std::string& rel) const;
  std::string expert_path(const std::string& id, DestructMode m) const;
  std::string data_path(const std::string& id, DestructMode m) const;
  std::string proxy_path(DestructMode m) const;
  std::string policy_path(DestructMode m) const;

 private:
  bool current(const std::string& file, Stage s) const;
  void note(const std::string& msg) const;
  PolicyWeights checked_policy(DestructMode m) const;

  ExperimentConfig cfg_;
  PipelineOptions opt_;
};

/// Provenance recorded in an artifact of any known kind.
Provenance read_provenance(const std::string& file);

/// Reads a trajectory file and validates every record. Returns the record count.
std::size_t validate_dataset(const std::string& file);

}  // namespace breakaway

#pragma once

#include "bifnet/centrality.hpp"
#include "bifnet/entropy.hpp"
#include "bifnet/graph.hpp"
#include "bifnet/reduce.hpp"
#include "bifnet/stats.hpp"
#include "bifnet/synthgen.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bifnet {

struct PipelineConfig {
  std::string input;
  std::string input_b;
  FeatureConfig features;
  Index dim = 3;
  double alpha = 0.975;
  double p_threshold = 0.01;
  EntropyMode mode = EntropyMode::Both;
  std::string out_dir = ".";
  int threads = 0;  // <= 0 means hardware concurrency
};

struct FeaturesResult {
  std::vector<FeatureMatrix> steps;
  PcaModel pca;
  std::vector<Matrix> embeddings;  // one n x l block per step
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

/// Per-step feature CSVs plus one globally fitted PCA embedding CSV.
FeaturesResult cmd_features(const PipelineConfig& cfg);

struct EntropyRow {
  long t = 0;
  double v = 0.0;
  double q = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double zv = 0.0;
  double zq = 0.0;
};

struct EntropyCmdResult {
  std::vector<EntropyRow> rows;  // NaN in fields the mode did not produce
  long eig_count = 0;            // eigendecompositions used by the series
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

EntropyCmdResult cmd_entropy(const PipelineConfig& cfg);

struct DetectResult {
  BifurcationReport report;
  std::vector<MveStep> mve_a;
  std::vector<MveStep> mve_b;
  std::vector<double> z_approx_a;  // Z-scored quadratic entropy per sequence
  std::vector<double> z_approx_b;
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

/// Full detection pipeline on two loaded sequences: features, shared PCA,
/// Mahalanobis trim, MVE fits, per-step Hotelling tests, entropy Z-scores.
/// Writes report.json, report.csv, and per-sequence ellipsoid JSONs.
DetectResult detect_sequences(const TemporalSequence& a, const TemporalSequence& b,
                              const PipelineConfig& cfg);

/// detect_sequences over cfg.input / cfg.input_b.
DetectResult cmd_detect(const PipelineConfig& cfg);

struct BenchRow {
  Index n = 0;
  double t_exact = 0.0;   // median seconds
  double t_approx = 0.0;  // median seconds
  double ratio = 0.0;     // t_exact / t_approx
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> files;
};

BenchResult cmd_bench(const std::vector<Index>& sizes, int trials, double p_edge,
                      std::uint64_t seed, const std::string& out_dir);

struct GenerateResult {
  std::string normal_path;
  std::string abnormal_path;
};

/// Writes the paired scenario sequences as temporal edge-list files.
GenerateResult cmd_generate(const ScenarioConfig& cfg, const std::string& out_dir);

}  // namespace bifnet

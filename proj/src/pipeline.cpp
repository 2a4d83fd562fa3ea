#include "bifnet/pipeline.hpp"

#include "bifnet/io.hpp"
#include "bifnet/parallel.hpp"
#include "bifnet/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace bifnet {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

int resolve_threads(int hint) {
  if (hint > 0) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  if (!dir.empty()) std::filesystem::create_directories(dir);
}

std::vector<FeatureMatrix> features_per_step(const TemporalSequence& seq,
                                             const FeatureConfig& cfg, int threads) {
  std::vector<FeatureMatrix> steps(seq.length());
  parallel_for(static_cast<int>(seq.length()), threads, [&](int i) {
    const std::size_t k = static_cast<std::size_t>(i);
    steps[k] = feature_matrix(seq.at(k), cfg, seq.timestamp(k));
  });
  return steps;
}

Matrix stack_features(const std::vector<FeatureMatrix>& steps) {
  Index rows = 0;
  for (const auto& s : steps) rows += s.values.rows();
  Matrix out(rows, steps.front().values.cols());
  Index at = 0;
  for (const auto& s : steps) {
    out.middleRows(at, s.values.rows()) = s.values;
    at += s.values.rows();
  }
  return out;
}

std::vector<double> entropy_values(const std::vector<EntropyResult>& series, bool exact) {
  std::vector<double> out(series.size(), kNan);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& field = exact ? series[k].exact : series[k].approx;
    if (field) out[k] = *field;
  }
  return out;
}

nlohmann::json ellipsoid_json(const std::vector<MveStep>& steps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const MveStep& s : steps) {
    nlohmann::json item;
    item["t"] = s.t;
    item["retained"] = s.retained;
    if (s.ellipsoid) {
      const Matrix p = s.ellipsoid->shape();
      const Vector c = s.ellipsoid->center();
      item["center"] = std::vector<double>(c.data(), c.data() + c.size());
      nlohmann::json pm = nlohmann::json::array();
      for (Index i = 0; i < p.rows(); ++i) {
        pm.push_back(std::vector<double>(p.row(i).begin(), p.row(i).end()));
      }
      item["P"] = std::move(pm);
      const double det = p.determinant();
      item["volume_proxy"] = det > 0.0 ? 1.0 / std::sqrt(det) : kNan;
    }
    if (!s.warning.empty()) item["warning"] = s.warning;
    arr.push_back(std::move(item));
  }
  return arr;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

FeaturesResult cmd_features(const PipelineConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("features: --input is required");
  ensure_dir(cfg.out_dir);
  const int threads = resolve_threads(cfg.threads);
  const TemporalSequence seq = read_temporal(cfg.input);

  FeaturesResult res;
  res.steps = features_per_step(seq, cfg.features, threads);
  for (const auto& s : res.steps) {
    res.warnings.insert(res.warnings.end(), s.warnings.begin(), s.warnings.end());
  }

  for (const auto& s : res.steps) {
    std::vector<std::string> header = {"node"};
    header.insert(header.end(), s.feature_names.begin(), s.feature_names.end());
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(s.values.rows()));
    for (Index i = 0; i < s.values.rows(); ++i) {
      std::vector<double> row = {static_cast<double>(i)};
      for (Index j = 0; j < s.values.cols(); ++j) row.push_back(s.values(i, j));
      rows.push_back(std::move(row));
    }
    const std::string path =
        join_path(cfg.out_dir, "features_t" + std::to_string(s.t) + ".csv");
    write_csv(path, header, rows);
    res.files.push_back(path);
  }

  res.pca = fit_pca(stack_features(res.steps), cfg.dim);
  std::vector<std::string> header = {"t", "node"};
  for (Index k = 0; k < cfg.dim; ++k) header.push_back("y" + std::to_string(k + 1));
  std::vector<std::vector<double>> rows;
  for (const auto& s : res.steps) {
    Matrix y = pca_transform(res.pca, s.values);
    for (Index i = 0; i < y.rows(); ++i) {
      std::vector<double> row = {static_cast<double>(s.t), static_cast<double>(i)};
      for (Index j = 0; j < y.cols(); ++j) row.push_back(y(i, j));
      rows.push_back(std::move(row));
    }
    res.embeddings.push_back(std::move(y));
  }
  const std::string emb_path = join_path(cfg.out_dir, "embedding.csv");
  write_csv(emb_path, header, rows);
  res.files.push_back(emb_path);
  return res;
}

EntropyCmdResult cmd_entropy(const PipelineConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("entropy: --input is required");
  ensure_dir(cfg.out_dir);
  const int threads = resolve_threads(cfg.threads);
  const TemporalSequence seq = read_temporal(cfg.input);

  reset_eig_count();
  const std::vector<EntropyResult> series = entropy_series(seq, cfg.mode, threads);
  EntropyCmdResult res;
  res.eig_count = eig_count();

  const std::vector<double> v = entropy_values(series, true);
  const std::vector<double> q = entropy_values(series, false);
  const std::vector<double> zv = zscore_series(v);
  const std::vector<double> zq = zscore_series(q);

  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < series.size(); ++k) {
    EntropyRow row;
    row.t = seq.timestamp(k);
    row.v = v[k];
    row.q = q[k];
    row.lower = series[k].lower.value_or(kNan);
    row.upper = series[k].upper.value_or(kNan);
    row.zv = zv[k];
    row.zq = zq[k];
    res.rows.push_back(row);
    rows.push_back({static_cast<double>(row.t), row.v, row.q, row.lower, row.upper,
                    row.zv, row.zq});
    if (!series[k].warning.empty()) res.warnings.push_back(series[k].warning);
  }
  const std::string path = join_path(cfg.out_dir, "entropy.csv");
  write_csv(path, {"t", "V", "Q", "lower", "upper", "zV", "zQ"}, rows);
  res.files.push_back(path);
  return res;
}

DetectResult detect_sequences(const TemporalSequence& a, const TemporalSequence& b,
                              const PipelineConfig& cfg) {
  if (a.node_count() != b.node_count() || a.length() != b.length() ||
      a.timestamps() != b.timestamps()) {
    throw std::invalid_argument("detect: sequences must share node count and time steps");
  }
  ensure_dir(cfg.out_dir);
  const int threads = resolve_threads(cfg.threads);
  const int steps = static_cast<int>(a.length());

  std::vector<FeatureMatrix> feats_a(a.length());
  std::vector<FeatureMatrix> feats_b(b.length());
  parallel_for(2 * steps, threads, [&](int i) {
    if (i < steps) {
      const std::size_t k = static_cast<std::size_t>(i);
      feats_a[k] = feature_matrix(a.at(k), cfg.features, a.timestamp(k));
    } else {
      const std::size_t k = static_cast<std::size_t>(i - steps);
      feats_b[k] = feature_matrix(b.at(k), cfg.features, b.timestamp(k));
    }
  });

  DetectResult res;
  for (const auto& s : feats_a) {
    for (const auto& w : s.warnings) res.warnings.push_back("a: " + w);
  }
  for (const auto& s : feats_b) {
    for (const auto& w : s.warnings) res.warnings.push_back("b: " + w);
  }

  const Matrix stack_a = stack_features(feats_a);
  const Matrix stack_b = stack_features(feats_b);
  Matrix stacked(stack_a.rows() + stack_b.rows(), stack_a.cols());
  stacked << stack_a, stack_b;
  const PcaModel pca = fit_pca(stacked, cfg.dim);

  std::vector<Matrix> emb_a;
  std::vector<Matrix> emb_b;
  for (const auto& s : feats_a) emb_a.push_back(pca_transform(pca, s.values));
  for (const auto& s : feats_b) emb_b.push_back(pca_transform(pca, s.values));

  res.mve_a = mve_per_step(emb_a, a.timestamps(), cfg.alpha);
  res.mve_b = mve_per_step(emb_b, b.timestamps(), cfg.alpha);
  for (const auto& s : res.mve_a) {
    if (!s.warning.empty()) res.warnings.push_back("a: " + s.warning);
  }
  for (const auto& s : res.mve_b) {
    if (!s.warning.empty()) res.warnings.push_back("b: " + s.warning);
  }

  const auto trimmed = [](const Matrix& emb, const MveStep& step) {
    Matrix kept(static_cast<Index>(step.retained.size()), emb.cols());
    for (std::size_t r = 0; r < step.retained.size(); ++r) {
      kept.row(static_cast<Index>(r)) = emb.row(step.retained[r]);
    }
    return kept;
  };
  std::vector<Matrix> clouds_a;
  std::vector<Matrix> clouds_b;
  for (std::size_t k = 0; k < a.length(); ++k) {
    clouds_a.push_back(trimmed(emb_a[k], res.mve_a[k]));
    clouds_b.push_back(trimmed(emb_b[k], res.mve_b[k]));
  }

  const std::vector<EntropyResult> ent_a = entropy_series(a, cfg.mode, threads);
  const std::vector<EntropyResult> ent_b = entropy_series(b, cfg.mode, threads);
  for (const auto& e : ent_a) {
    if (!e.warning.empty()) res.warnings.push_back("a: " + e.warning);
  }
  for (const auto& e : ent_b) {
    if (!e.warning.empty()) res.warnings.push_back("b: " + e.warning);
  }
  const bool has_exact = cfg.mode != EntropyMode::Approx;
  const std::vector<double> v_a = entropy_values(ent_a, true);
  const std::vector<double> v_b = entropy_values(ent_b, true);
  const std::vector<double> q_a = entropy_values(ent_a, false);
  const std::vector<double> q_b = entropy_values(ent_b, false);

  res.report = bifurcation_report(clouds_a, clouds_b, has_exact ? v_a : q_a,
                                  has_exact ? v_b : q_b, cfg.p_threshold, &a.timestamps());
  res.z_approx_a = zscore_series(q_a);
  res.z_approx_b = zscore_series(q_b);

  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < a.length(); ++k) {
    rows.push_back({static_cast<double>(res.report.timestamps[k]), res.report.t2[k],
                    res.report.f[k], res.report.p[k], res.report.z_entropy_a[k],
                    res.report.z_entropy_b[k], res.z_approx_a[k], res.z_approx_b[k]});
  }
  const std::string csv_path = join_path(cfg.out_dir, "report.csv");
  write_csv(csv_path, {"t", "T2", "F", "p", "zV_A", "zV_B", "zQ_A", "zQ_B"}, rows);
  res.files.push_back(csv_path);

  nlohmann::json doc;
  doc["threshold"] = res.report.threshold;
  doc["critical_time"] =
      res.report.critical_time ? nlohmann::json(*res.report.critical_time) : nlohmann::json();
  nlohmann::json step_arr = nlohmann::json::array();
  for (std::size_t k = 0; k < a.length(); ++k) {
    nlohmann::json item;
    item["t"] = res.report.timestamps[k];
    item["t2"] = res.report.t2[k];
    item["f"] = res.report.f[k];
    item["p"] = res.report.p[k];
    item["zV_a"] = res.report.z_entropy_a[k];
    item["zV_b"] = res.report.z_entropy_b[k];
    item["zQ_a"] = res.z_approx_a[k];
    item["zQ_b"] = res.z_approx_b[k];
    step_arr.push_back(std::move(item));
  }
  doc["steps"] = std::move(step_arr);
  doc["warnings"] = res.report.warnings;
  const std::string json_path = join_path(cfg.out_dir, "report.json");
  write_text(json_path, doc.dump(2) + "\n");
  res.files.push_back(json_path);

  const std::string ell_a = join_path(cfg.out_dir, "ellipsoids_a.json");
  const std::string ell_b = join_path(cfg.out_dir, "ellipsoids_b.json");
  write_text(ell_a, ellipsoid_json(res.mve_a).dump(2) + "\n");
  write_text(ell_b, ellipsoid_json(res.mve_b).dump(2) + "\n");
  res.files.push_back(ell_a);
  res.files.push_back(ell_b);
  return res;
}

DetectResult cmd_detect(const PipelineConfig& cfg) {
  if (cfg.input.empty() || cfg.input_b.empty()) {
    throw std::invalid_argument("detect: --input and --input-b are required");
  }
  const TemporalSequence a = read_temporal(cfg.input);
  const TemporalSequence b = read_temporal(cfg.input_b);
  return detect_sequences(a, b, cfg);
}

BenchResult cmd_bench(const std::vector<Index>& sizes, int trials, double p_edge,
                      std::uint64_t seed, const std::string& out_dir) {
  if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  for (Index n : sizes) {
    if (n < 100) throw std::invalid_argument("bench: sizes must be >= 100");
  }
  ensure_dir(out_dir);

  using clock = std::chrono::steady_clock;
  BenchResult res;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<double> exact_times;
    std::vector<double> approx_times;
    for (int trial = 0; trial < trials; ++trial) {
      const Graph g = erdos_renyi(static_cast<int>(sizes[i]), p_edge,
                                  mix_seed(seed, i, static_cast<std::uint64_t>(trial)));
      auto t0 = clock::now();
      volatile double sink = vnge_exact(g).value;
      auto t1 = clock::now();
      sink = vnge_approx(g);
      auto t2 = clock::now();
      (void)sink;
      exact_times.push_back(std::chrono::duration<double>(t1 - t0).count());
      approx_times.push_back(std::chrono::duration<double>(t2 - t1).count());
    }
    BenchRow row;
    row.n = sizes[i];
    row.t_exact = median(exact_times);
    row.t_approx = median(approx_times);
    row.ratio = row.t_approx > 0.0 ? row.t_exact / row.t_approx
                                   : std::numeric_limits<double>::infinity();
    res.rows.push_back(row);
  }

  std::vector<std::vector<double>> rows;
  for (const BenchRow& r : res.rows) {
    rows.push_back({static_cast<double>(r.n), r.t_exact, r.t_approx, r.ratio});
  }
  const std::string path = join_path(out_dir, "bench.csv");
  write_csv(path, {"n", "t_exact", "t_approx", "ratio"}, rows);
  res.files.push_back(path);
  return res;
}

GenerateResult cmd_generate(const ScenarioConfig& cfg, const std::string& out_dir) {
  ensure_dir(out_dir);
  const ScenarioPair pair = scenario(cfg);
  GenerateResult res;
  res.normal_path = join_path(out_dir, "normal.edgelist");
  res.abnormal_path = join_path(out_dir, "abnormal.edgelist");
  write_temporal(pair.normal, res.normal_path);
  write_temporal(pair.abnormal, res.abnormal_path);
  return res;
}

}  // namespace bifnet

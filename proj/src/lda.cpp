#include "kpas/lda.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <vector>

#include "json.hpp"

#include "kpas/errors.hpp"

namespace kpas {

namespace {

constexpr int kDim = kFeatureCount;
using Vec = std::array<double, kDim>;
using Mat = std::array<std::array<double, kDim>, kDim>;

// Fixed block size for the two-pass accumulation. Partial sums are always
// combined in block order, which keeps the serial and parallel routes
// bit-identical regardless of thread count.
constexpr std::size_t kBlock = 256;

template <typename Accum, typename Add>
void blocked_accumulate(std::size_t n, Exec exec, std::vector<Accum>& blocks, Add add) {
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  blocks.assign(nblocks, Accum{});
  parallel_for(nblocks, exec, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) add(blocks[b], i);
  });
}

Vec class_mean(const std::vector<const FeatureVector*>& xs, Exec exec) {
  struct Sum {
    Vec v{};
  };
  std::vector<Sum> blocks;
  blocked_accumulate<Sum>(xs.size(), exec, blocks, [&](Sum& acc, std::size_t i) {
    const Vec x = xs[i]->to_array();
    for (int d = 0; d < kDim; ++d) acc.v[d] += x[d];
  });
  Vec mean{};
  for (const Sum& b : blocks) {
    for (int d = 0; d < kDim; ++d) mean[d] += b.v[d];
  }
  for (int d = 0; d < kDim; ++d) mean[d] /= static_cast<double>(xs.size());
  return mean;
}

void add_scatter(Mat& total, const std::vector<const FeatureVector*>& xs, const Vec& mean,
                 Exec exec) {
  struct Partial {
    Mat m{};
  };
  std::vector<Partial> blocks;
  blocked_accumulate<Partial>(xs.size(), exec, blocks, [&](Partial& acc, std::size_t i) {
    const Vec x = xs[i]->to_array();
    Vec d{};
    for (int k = 0; k < kDim; ++k) d[k] = x[k] - mean[k];
    for (int r = 0; r < kDim; ++r) {
      for (int c = 0; c < kDim; ++c) acc.m[r][c] += d[r] * d[c];
    }
  });
  for (const Partial& b : blocks) {
    for (int r = 0; r < kDim; ++r) {
      for (int c = 0; c < kDim; ++c) total[r][c] += b.m[r][c];
    }
  }
}

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns false when A is numerically singular.
bool solve(Mat a, Vec b, Vec& x) {
  std::array<int, kDim> perm;
  for (int i = 0; i < kDim; ++i) perm[i] = i;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    double best = std::fabs(a[perm[col]][col]);
    for (int r = col + 1; r < kDim; ++r) {
      const double v = std::fabs(a[perm[r]][col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-300) return false;
    std::swap(perm[col], perm[pivot]);
    const double diag = a[perm[col]][col];
    for (int r = col + 1; r < kDim; ++r) {
      const double f = a[perm[r]][col] / diag;
      if (f == 0.0) continue;
      for (int c = col; c < kDim; ++c) a[perm[r]][c] -= f * a[perm[col]][c];
      b[perm[r]] -= f * b[perm[col]];
    }
  }
  for (int col = kDim - 1; col >= 0; --col) {
    double v = b[perm[col]];
    for (int c = col + 1; c < kDim; ++c) v -= a[perm[col]][c] * x[c];
    x[col] = v / a[perm[col]][col];
  }
  return true;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int d = 0; d < kDim; ++d) s += a[d] * b[d];
  return s;
}

}  // namespace

LdaModel train(const std::vector<LabeledSample>& samples, double reg_lambda,
               const FeatureOptions& directions, Exec exec) {
  if (reg_lambda < 0) throw Error("reg_lambda must be non-negative");
  std::vector<const FeatureVector*> pos, neg;
  for (const LabeledSample& s : samples) {
    (s.is_keyphrase ? pos : neg).push_back(&s.features);
  }
  if (pos.size() < 2 || neg.size() < 2) {
    throw DegenerateClasses("need at least two samples per class (got " +
                            std::to_string(pos.size()) + " positive, " +
                            std::to_string(neg.size()) + " negative)");
  }

  const Vec mu_pos = class_mean(pos, exec);
  const Vec mu_neg = class_mean(neg, exec);

  Vec delta{};
  double delta_norm2 = 0;
  for (int d = 0; d < kDim; ++d) {
    delta[d] = mu_pos[d] - mu_neg[d];
    delta_norm2 += delta[d] * delta[d];
  }
  if (delta_norm2 == 0) {
    throw DegenerateClasses("class means coincide; samples carry no separation");
  }

  Mat scatter{};
  add_scatter(scatter, pos, mu_pos, exec);
  add_scatter(scatter, neg, mu_neg, exec);
  const double denom = static_cast<double>(pos.size() + neg.size() - 2);
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) scatter[r][c] /= denom;
  }

  double trace = 0;
  for (int d = 0; d < kDim; ++d) trace += scatter[d][d];
  // Ridge scaled by the mean eigenvalue; absolute when the scatter vanishes
  // (e.g. both classes are repeated points).
  const double ridge = reg_lambda * (trace > 0 ? trace / kDim : 1.0);
  for (int d = 0; d < kDim; ++d) scatter[d][d] += ridge;

  Vec w{};
  if (!solve(scatter, delta, w)) {
    throw SingularScatter("within-class scatter is singular; increase reg_lambda");
  }

  const double norm = std::sqrt(dot(w, w));
  if (!(norm > 0) || !std::isfinite(norm)) {
    throw SingularScatter("discriminant collapsed to the zero vector");
  }
  for (int d = 0; d < kDim; ++d) w[d] /= norm;

  // Orient so the positive class scores higher.
  if (dot(w, mu_pos) < dot(w, mu_neg)) {
    for (int d = 0; d < kDim; ++d) w[d] = -w[d];
  }

  LdaModel model;
  model.weights = w;
  model.mean_pos = mu_pos;
  model.mean_neg = mu_neg;
  model.reg_lambda = reg_lambda;
  model.nsl_early_high = directions.nsl_early_high;
  model.npl_early_high = directions.npl_early_high;
  Vec midpoint{};
  for (int d = 0; d < kDim; ++d) midpoint[d] = 0.5 * (mu_pos[d] + mu_neg[d]);
  model.bias = -dot(w, midpoint);
  return model;
}

double score(const LdaModel& model, const FeatureVector& fv) {
  const auto x = fv.to_array();
  double s = model.bias;
  for (int d = 0; d < kDim; ++d) s += model.weights[d] * x[d];
  return s;
}

std::vector<double> score_all(const LdaModel& model, const std::vector<FeatureVector>& features,
                              Exec exec) {
  std::vector<double> out(features.size());
  parallel_for(features.size(), exec, [&](std::size_t i) { out[i] = score(model, features[i]); });
  return out;
}

namespace {

constexpr int kModelVersion = 1;

nlohmann::json vec_to_json(const Vec& v) { return nlohmann::json(std::vector<double>(v.begin(), v.end())); }

Vec vec_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.size() != kDim) {
    throw ModelFormatError(std::string("model field '") + field + "' must be an array of " +
                           std::to_string(kDim) + " numbers");
  }
  Vec v{};
  for (int d = 0; d < kDim; ++d) {
    if (!j[d].is_number()) {
      throw ModelFormatError(std::string("model field '") + field + "' has a non-numeric entry");
    }
    v[d] = j[d].get<double>();
  }
  return v;
}

}  // namespace

void save_model(const LdaModel& model, std::ostream& out) {
  nlohmann::json j;
  j["version"] = kModelVersion;
  j["weights"] = vec_to_json(model.weights);
  j["bias"] = model.bias;
  j["mean_pos"] = vec_to_json(model.mean_pos);
  j["mean_neg"] = vec_to_json(model.mean_neg);
  j["reg_lambda"] = model.reg_lambda;
  j["nsl_early_high"] = model.nsl_early_high;
  j["npl_early_high"] = model.npl_early_high;
  out << j.dump(2) << '\n';
}

void save_model_file(const LdaModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file: " + path);
  save_model(model, out);
}

LdaModel load_model(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ModelFormatError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelFormatError("model file must contain a JSON object");
  for (const char* field : {"version", "weights", "bias", "mean_pos", "mean_neg", "reg_lambda",
                            "nsl_early_high", "npl_early_high"}) {
    if (!j.contains(field)) {
      throw ModelFormatError(std::string("model file is missing field '") + field + "'");
    }
  }
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kModelVersion) {
    throw ModelFormatError("unsupported model version");
  }
  if (!j["bias"].is_number() || !j["reg_lambda"].is_number() ||
      !j["nsl_early_high"].is_boolean() || !j["npl_early_high"].is_boolean()) {
    throw ModelFormatError("model file has a field of the wrong type");
  }
  LdaModel model;
  model.weights = vec_from_json(j["weights"], "weights");
  model.mean_pos = vec_from_json(j["mean_pos"], "mean_pos");
  model.mean_neg = vec_from_json(j["mean_neg"], "mean_neg");
  model.bias = j["bias"].get<double>();
  model.reg_lambda = j["reg_lambda"].get<double>();
  model.nsl_early_high = j["nsl_early_high"].get<bool>();
  model.npl_early_high = j["npl_early_high"].get<bool>();
  return model;
}

LdaModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  return load_model(in);
}

}  // namespace kpas

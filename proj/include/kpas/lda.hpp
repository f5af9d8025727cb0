#ifndef KPAS_LDA_HPP
#define KPAS_LDA_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "kpas/features.hpp"
#include "kpas/parallel.hpp"

namespace kpas {

struct LabeledSample {
  FeatureVector features;
  bool is_keyphrase = false;
};

// Two-class Fisher discriminant with a ridge on the pooled scatter. The
// weight vector is unit length and oriented so the positive class scores
// higher; bias puts the class-mean midpoint at score zero.
struct LdaModel {
  std::array<double, kFeatureCount> weights{};
  double bias = 0;
  std::array<double, kFeatureCount> mean_pos{};
  std::array<double, kFeatureCount> mean_neg{};
  double reg_lambda = 0;
  bool nsl_early_high = true;
  bool npl_early_high = true;

  FeatureOptions feature_options() const { return {nsl_early_high, npl_early_high}; }
};

inline constexpr double kDefaultRegLambda = 1e-3;

// Throws DegenerateClasses when a class has fewer than two samples or the
// class means coincide; SingularScatter when lambda = 0 and the scatter is
// rank-deficient.
LdaModel train(const std::vector<LabeledSample>& samples, double reg_lambda = kDefaultRegLambda,
               const FeatureOptions& directions = {}, Exec exec = Exec::serial);

double score(const LdaModel& model, const FeatureVector& fv);

std::vector<double> score_all(const LdaModel& model, const std::vector<FeatureVector>& features,
                              Exec exec = Exec::serial);

void save_model(const LdaModel& model, std::ostream& out);
void save_model_file(const LdaModel& model, const std::string& path);

// Throws ModelFormatError on version/field mismatch or truncated input.
LdaModel load_model(std::istream& in);
LdaModel load_model_file(const std::string& path);

}  // namespace kpas

#endif  // KPAS_LDA_HPP

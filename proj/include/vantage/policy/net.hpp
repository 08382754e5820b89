#pragma once

#include <string>
#include <vector>

#include "vantage/core/rng.hpp"
#include "vantage/policy/features.hpp"

namespace vantage::policy {

/// One-hidden-layer action head: feature vector -> 6 logits, max(0,.) units.
struct ActionHead {
  int in = kFeatureDim;
  int hidden = 32;
  int out = sim::kNumActions;
  std::vector<double> w1, b1;  // hidden x in, hidden
  std::vector<double> w2, b2;  // out x hidden, out

  void init(int hidden_width, uint64_t seed);
  std::vector<double> forward(const FeatureVector& x, std::vector<double>* hidden_act) const;
  /// Accumulates dLoss/dparams given dLoss/dlogits; layout mirrors the head.
  void backward(const FeatureVector& x, const std::vector<double>& hidden_act,
                const std::vector<double>& dlogits, ActionHead* grad) const;
  void zero();
};

/// 3-way linear routing head over a hashed bag-of-tokens instruction encoding.
struct RoutingHead {
  int bins = 32;
  int out = scene::kNumTaskTypes;
  std::vector<double> w, b;  // out x bins, out

  void init(int bin_count, uint64_t seed);
  std::vector<double> encode(const std::string& text) const;  // bag of hashed tokens
  std::vector<double> forward(const std::vector<double>& bag) const;
  void backward(const std::vector<double>& bag, const std::vector<double>& dlogits,
                RoutingHead* grad) const;
  void zero();
};

struct PolicyParams {
  static constexpr int kFormatVersion = 1;
  RoutingHead routing;
  ActionHead action;

  static PolicyParams random_init(uint64_t seed, int hidden = 32, int bins = 32);
  void save(const std::string& path) const;
  static PolicyParams load(const std::string& path);

  /// In-place axpy over every weight: this += alpha * other (same shapes).
  void axpy(double alpha, const PolicyParams& other);
  void zero();
  double max_abs() const;
  bool all_finite() const;
};

/// Temperature softmax; temperature 0 is an argmax one-hot (ties -> lowest
/// index). Probabilities sum to 1.
std::vector<double> softmax(const std::vector<double>& logits, double temperature);

/// Inverse-CDF sample from a probability vector.
int sample_index(const std::vector<double>& probs, Rng& rng);

}  // namespace vantage::policy

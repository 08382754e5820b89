#include "vantage/policy/net.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vantage::policy {

namespace {

void fill_uniform(std::vector<double>& v, size_t n, double scale, Rng& rng) {
  v.resize(n);
  for (auto& x : v) x = rng.uniform(-scale, scale);
}

void write_block(std::ostream& out, const char* name, const std::vector<double>& v) {
  out << name << ' ' << v.size();
  char buf[40];
  for (double x : v) {
    std::snprintf(buf, sizeof(buf), " %a", x);  // hexfloat: lossless, byte-stable
    out << buf;
  }
  out << '\n';
}

std::vector<double> read_block(std::istream& in, const std::string& expect) {
  std::string name;
  size_t n = 0;
  if (!(in >> name >> n) || name != expect)
    throw std::runtime_error("policy file: expected block '" + expect + "'");
  std::vector<double> v(n);
  for (auto& x : v) {
    std::string tok;
    if (!(in >> tok)) throw std::runtime_error("policy file: truncated block '" + expect + "'");
    x = std::strtod(tok.c_str(), nullptr);
  }
  return v;
}

void axpy_vec(std::vector<double>& dst, double a, const std::vector<double>& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("axpy: shape mismatch");
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
}

}  // namespace

void ActionHead::init(int hidden_width, uint64_t seed) {
  hidden = hidden_width;
  Rng rng(mix_seed(seed, stream_tag("action-head")));
  fill_uniform(w1, static_cast<size_t>(hidden) * in, 1.0 / std::sqrt(in), rng);
  fill_uniform(b1, hidden, 0.0, rng);
  fill_uniform(w2, static_cast<size_t>(out) * hidden, 1.0 / std::sqrt(hidden), rng);
  fill_uniform(b2, out, 0.0, rng);
}

std::vector<double> ActionHead::forward(const FeatureVector& x,
                                        std::vector<double>* hidden_act) const {
  std::vector<double> h(hidden);
  for (int j = 0; j < hidden; ++j) {
    double acc = b1[j];
    const double* row = &w1[static_cast<size_t>(j) * in];
    for (int i = 0; i < in; ++i) acc += row[i] * x[i];
    h[j] = acc > 0.0 ? acc : 0.0;
  }
  std::vector<double> logits(out);
  for (int k = 0; k < out; ++k) {
    double acc = b2[k];
    const double* row = &w2[static_cast<size_t>(k) * hidden];
    for (int j = 0; j < hidden; ++j) acc += row[j] * h[j];
    logits[k] = acc;
  }
  if (hidden_act) *hidden_act = std::move(h);
  return logits;
}

void ActionHead::backward(const FeatureVector& x, const std::vector<double>& hidden_act,
                          const std::vector<double>& dlogits, ActionHead* grad) const {
  std::vector<double> dh(hidden, 0.0);
  for (int k = 0; k < out; ++k) {
    const double g = dlogits[k];
    grad->b2[k] += g;
    double* grow = &grad->w2[static_cast<size_t>(k) * hidden];
    const double* row = &w2[static_cast<size_t>(k) * hidden];
    for (int j = 0; j < hidden; ++j) {
      grow[j] += g * hidden_act[j];
      dh[j] += g * row[j];
    }
  }
  for (int j = 0; j < hidden; ++j) {
    if (hidden_act[j] <= 0.0) continue;  // ReLU gate
    grad->b1[j] += dh[j];
    double* grow = &grad->w1[static_cast<size_t>(j) * in];
    for (int i = 0; i < in; ++i) grow[i] += dh[j] * x[i];
  }
}

void ActionHead::zero() {
  std::fill(w1.begin(), w1.end(), 0.0);
  std::fill(b1.begin(), b1.end(), 0.0);
  std::fill(w2.begin(), w2.end(), 0.0);
  std::fill(b2.begin(), b2.end(), 0.0);
}

void RoutingHead::init(int bin_count, uint64_t seed) {
  bins = bin_count;
  Rng rng(mix_seed(seed, stream_tag("routing-head")));
  fill_uniform(w, static_cast<size_t>(out) * bins, 1.0 / std::sqrt(bins), rng);
  fill_uniform(b, out, 0.0, rng);
}

std::vector<double> RoutingHead::encode(const std::string& text) const {
  std::vector<double> bag(bins, 0.0);
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    bag[stream_tag(tok) % static_cast<uint64_t>(bins)] += 1.0;
  }
  return bag;
}

std::vector<double> RoutingHead::forward(const std::vector<double>& bag) const {
  std::vector<double> logits(out);
  for (int k = 0; k < out; ++k) {
    double acc = b[k];
    const double* row = &w[static_cast<size_t>(k) * bins];
    for (int i = 0; i < bins; ++i) acc += row[i] * bag[i];
    logits[k] = acc;
  }
  return logits;
}

void RoutingHead::backward(const std::vector<double>& bag, const std::vector<double>& dlogits,
                           RoutingHead* grad) const {
  for (int k = 0; k < out; ++k) {
    grad->b[k] += dlogits[k];
    double* grow = &grad->w[static_cast<size_t>(k) * bins];
    for (int i = 0; i < bins; ++i) grow[i] += dlogits[k] * bag[i];
  }
}

void RoutingHead::zero() {
  std::fill(w.begin(), w.end(), 0.0);
  std::fill(b.begin(), b.end(), 0.0);
}

PolicyParams PolicyParams::random_init(uint64_t seed, int hidden, int bins) {
  PolicyParams p;
  p.routing.init(bins, seed);
  p.action.init(hidden, mix_seed(seed, 1));
  return p;
}

void PolicyParams::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("policy save: cannot open " + path);
  out << "vantage-policy v" << kFormatVersion << '\n';
  out << "shape " << routing.bins << ' ' << action.in << ' ' << action.hidden << ' ' << action.out
      << '\n';
  write_block(out, "routing_w", routing.w);
  write_block(out, "routing_b", routing.b);
  write_block(out, "w1", action.w1);
  write_block(out, "b1", action.b1);
  write_block(out, "w2", action.w2);
  write_block(out, "b2", action.b2);
}

PolicyParams PolicyParams::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("policy load: cannot open " + path);
  std::string magic, version;
  in >> magic >> version;
  if (magic != "vantage-policy" || version != "v" + std::to_string(kFormatVersion))
    throw std::runtime_error("policy load: unsupported header in " + path);
  std::string shape;
  PolicyParams p;
  int in_dim = 0;
  if (!(in >> shape >> p.routing.bins >> in_dim >> p.action.hidden >> p.action.out) ||
      shape != "shape")
    throw std::runtime_error("policy load: bad shape header");
  if (in_dim != kFeatureDim)
    throw std::runtime_error("policy load: feature dimension mismatch");
  p.action.in = in_dim;
  p.routing.w = read_block(in, "routing_w");
  p.routing.b = read_block(in, "routing_b");
  p.action.w1 = read_block(in, "w1");
  p.action.b1 = read_block(in, "b1");
  p.action.w2 = read_block(in, "w2");
  p.action.b2 = read_block(in, "b2");
  if (!p.all_finite()) throw std::runtime_error("policy load: non-finite parameters");
  return p;
}

void PolicyParams::axpy(double alpha, const PolicyParams& other) {
  axpy_vec(routing.w, alpha, other.routing.w);
  axpy_vec(routing.b, alpha, other.routing.b);
  axpy_vec(action.w1, alpha, other.action.w1);
  axpy_vec(action.b1, alpha, other.action.b1);
  axpy_vec(action.w2, alpha, other.action.w2);
  axpy_vec(action.b2, alpha, other.action.b2);
}

void PolicyParams::zero() {
  routing.zero();
  action.zero();
}

double PolicyParams::max_abs() const {
  double m = 0.0;
  for (const auto* v : {&routing.w, &routing.b, &action.w1, &action.b1, &action.w2, &action.b2})
    for (double x : *v) m = std::max(m, std::abs(x));
  return m;
}

bool PolicyParams::all_finite() const {
  for (const auto* v : {&routing.w, &routing.b, &action.w1, &action.b1, &action.w2, &action.b2})
    for (double x : *v)
      if (!std::isfinite(x)) return false;
  return true;
}

std::vector<double> softmax(const std::vector<double>& logits, double temperature) {
  std::vector<double> p(logits.size(), 0.0);
  if (temperature <= 0.0) {
    size_t best = 0;
    for (size_t i = 1; i < logits.size(); ++i)
      if (logits[i] > logits[best]) best = i;
    p[best] = 1.0;
    return p;
  }
  double mx = logits[0];
  for (double l : logits) mx = std::max(mx, l);
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp((logits[i] - mx) / temperature);
    sum += p[i];
  }
  for (auto& x : p) x /= sum;
  return p;
}

int sample_index(const std::vector<double>& probs, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace vantage::policy

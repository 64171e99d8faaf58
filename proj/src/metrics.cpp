#include "holoforge/metrics.hpp"

#include "holoforge/error.hpp"

namespace holoforge {

MetricValue precision(std::uint64_t tp, std::uint64_t fp) {
  if (tp + fp == 0) return {0.0, true};
  return {static_cast<double>(tp) / static_cast<double>(tp + fp), false};
}

MetricValue recall(std::uint64_t tp, std::uint64_t fn) {
  if (tp + fn == 0) return {0.0, true};
  return {static_cast<double>(tp) / static_cast<double>(tp + fn), false};
}

MetricValue f1(double precision, double recall) {
  require(precision >= 0.0 && precision <= 1.0 && recall >= 0.0 && recall <= 1.0,
          ErrorKind::invalid_argument, "precision and recall must lie in [0, 1]");
  if (precision + recall == 0.0) return {0.0, true};
  return {2.0 * precision * recall / (precision + recall), false};
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), counts_(labels_.size() * labels_.size(), 0) {
  require(!labels_.empty(), ErrorKind::invalid_argument,
          "confusion matrix needs at least one label");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    require(index_.emplace(labels_[i], i).second, ErrorKind::invalid_argument,
            "duplicate label '" + labels_[i] + "'");
  }
}

std::size_t ConfusionMatrix::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorKind::invalid_argument, "unknown label '" + label + "'");
  return it->second;
}

void ConfusionMatrix::add(const std::string& truth, const std::string& predicted) {
  ++counts_[index_of(truth) * labels_.size() + index_of(predicted)];
}

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

std::uint64_t ConfusionMatrix::true_positives(std::size_t label) const {
  return count(label, label);
}

std::uint64_t ConfusionMatrix::false_positives(std::size_t label) const {
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < labels_.size(); ++t) {
    if (t != label) sum += count(t, label);
  }
  return sum;
}

std::uint64_t ConfusionMatrix::false_negatives(std::size_t label) const {
  std::uint64_t sum = 0;
  for (std::size_t p = 0; p < labels_.size(); ++p) {
    if (p != label) sum += count(label, p);
  }
  return sum;
}

MetricValue f1_micro(const ConfusionMatrix& cm) {
  std::uint64_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < cm.labels().size(); ++i) {
    tp += cm.true_positives(i);
    fp += cm.false_positives(i);
    fn += cm.false_negatives(i);
  }
  const auto p = precision(tp, fp);
  const auto r = recall(tp, fn);
  auto score = f1(p.value, r.value);
  score.degenerate = score.degenerate || p.degenerate || r.degenerate;
  return score;
}

std::vector<ClassMetrics> per_class_metrics(const ConfusionMatrix& cm) {
  std::vector<ClassMetrics> out;
  for (std::size_t i = 0; i < cm.labels().size(); ++i) {
    ClassMetrics m;
    m.label = cm.labels()[i];
    m.precision = precision(cm.true_positives(i), cm.false_positives(i));
    m.recall = recall(cm.true_positives(i), cm.false_negatives(i));
    m.f1 = f1(m.precision.value, m.recall.value);
    m.support = cm.true_positives(i) + cm.false_negatives(i);
    out.push_back(m);
  }
  return out;
}

}  // namespace holoforge

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace holoforge {

// A metric with a zero denominator evaluates to 0 and sets `degenerate`.
struct MetricValue {
  double value = 0.0;
  bool degenerate = false;
};

MetricValue precision(std::uint64_t tp, std::uint64_t fp);
MetricValue recall(std::uint64_t tp, std::uint64_t fn);
MetricValue f1(double precision, double recall);

class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> labels);

  void add(const std::string& truth, const std::string& predicted);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::uint64_t count(std::size_t truth, std::size_t predicted) const {
    return counts_[truth * labels_.size() + predicted];
  }
  std::uint64_t total() const;

  std::uint64_t true_positives(std::size_t label) const;
  std::uint64_t false_positives(std::size_t label) const;
  std::uint64_t false_negatives(std::size_t label) const;

 private:
  std::size_t index_of(const std::string& label) const;

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::uint64_t> counts_;
};

// F1 of counts pooled over every class.
MetricValue f1_micro(const ConfusionMatrix& cm);

struct ClassMetrics {
  std::string label;
  MetricValue precision;
  MetricValue recall;
  MetricValue f1;
  std::uint64_t support = 0;
};

std::vector<ClassMetrics> per_class_metrics(const ConfusionMatrix& cm);

}  // namespace holoforge

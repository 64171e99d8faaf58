#include <doctest.h>

#include "holoforge/metrics.hpp"
#include "support.hpp"

using namespace holoforge;

TEST_CASE("f1 identities") {
  for (double p : {0.1, 0.37, 0.5, 0.9, 1.0}) CHECK(f1(p, p).value == doctest::Approx(p).epsilon(1e-15));
  CHECK(f1(0.5, 1.0).value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(f1(0.0, 0.0).value == 0.0);
  CHECK(f1(0.0, 0.0).degenerate);
  CHECK(testing::error_kind([] { f1(1.5, 0.2); }) == ErrorKind::invalid_argument);
}

TEST_CASE("precision and recall") {
  CHECK(precision(3, 1).value == 0.75);
  CHECK(recall(3, 3).value == 0.5);
  CHECK_FALSE(precision(3, 1).degenerate);
  CHECK(precision(0, 0).degenerate);
  CHECK(precision(0, 0).value == 0.0);
  CHECK(recall(0, 0).degenerate);
}

TEST_CASE("confusion matrix and micro f1") {
  ConfusionMatrix cm({"mine", "clutter", "pottery"});
  cm.add("mine", "mine");
  cm.add("mine", "clutter");
  cm.add("clutter", "clutter");
  cm.add("pottery", "mine");
  CHECK(cm.total() == 4);
  CHECK(cm.true_positives(0) == 1);
  CHECK(cm.false_positives(0) == 1);
  CHECK(cm.false_negatives(0) == 1);
  // single-label multi-class: pooled precision = recall = accuracy
  CHECK(f1_micro(cm).value == doctest::Approx(0.5));
  const auto per = per_class_metrics(cm);
  CHECK(per[1].precision.value == 0.5);
  CHECK(per[1].recall.value == 1.0);
  CHECK(per[2].support == 1);
  CHECK(per[2].precision.degenerate);
  CHECK(testing::error_kind([&] { cm.add("mine", "stone"); }) == ErrorKind::invalid_argument);
  CHECK(testing::error_kind([] { ConfusionMatrix({"a", "a"}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("perfect predictions score 1") {
  ConfusionMatrix cm({"mine", "non-mine"});
  for (int i = 0; i < 7; ++i) cm.add("mine", "mine");
  for (int i = 0; i < 5; ++i) cm.add("non-mine", "non-mine");
  CHECK(f1_micro(cm).value == 1.0);
  CHECK_FALSE(f1_micro(cm).degenerate);
}

TEST_CASE("empty confusion matrix is degenerate, not NaN") {
  ConfusionMatrix cm({"a", "b"});
  CHECK(f1_micro(cm).value == 0.0);
  CHECK(f1_micro(cm).degenerate);
}

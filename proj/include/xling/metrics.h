#ifndef XLING_METRICS_H_
#define XLING_METRICS_H_

#include <cstdint>

namespace xling {

// Counts for one binary decision (positive = "class present").
struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  void add(bool gold, bool predicted);
  std::uint64_t total() const { return tp + fp + fn + tn; }
};

// Precision and recall are 0 when their denominator is 0; the matching
// flag records that the value is a convention rather than a ratio.
struct BinaryMetrics {
  Confusion counts;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_undefined = false;
  bool recall_undefined = false;
};

BinaryMetrics binary_metrics(const Confusion& c);

}  // namespace xling

#endif  // XLING_METRICS_H_

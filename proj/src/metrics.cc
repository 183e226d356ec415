#include "xling/metrics.h"

namespace xling {

void Confusion::add(bool gold, bool predicted) {
  if (gold && predicted) {
    ++tp;
  } else if (!gold && predicted) {
    ++fp;
  } else if (gold) {
    ++fn;
  } else {
    ++tn;
  }
}

BinaryMetrics binary_metrics(const Confusion& c) {
  BinaryMetrics m;
  m.counts = c;
  const auto total = c.total();
  if (total > 0) m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
  if (c.tp + c.fp > 0) {
    m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  } else {
    m.precision_undefined = true;
  }
  if (c.tp + c.fn > 0) {
    m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  } else {
    m.recall_undefined = true;
  }
  if (m.precision + m.recall > 0.0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

}  // namespace xling

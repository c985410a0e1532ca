#pragma once

#include <functional>
#include <vector>

#include "simplecubic/record.hpp"

namespace simplecubic {

struct ScanOptions {
  Integer lo = -1;
  Integer hi = -1;
  /// Worker threads; 0 or 1 runs on the calling thread.
  unsigned jobs = 1;
  AnalyzeOptions analyze;
  /// Records for which this returns false are dropped (evaluated in workers).
  std::function<bool(const AnalysisRecord&)> keep;
};

/// Analyzes every t in [lo, hi] and hands the kept records to emit in
/// ascending t, whatever the number of workers. Requires -1 <= lo <= hi.
/// An exception thrown by a worker is rethrown here after the pool stops.
void scan(const ScanOptions& options, const std::function<void(const AnalysisRecord&)>& emit);

std::vector<AnalysisRecord> scan_collect(const ScanOptions& options);

/// Job count from SIMPLECUBIC_JOBS, else the hardware concurrency.
unsigned default_jobs();

}  // namespace simplecubic

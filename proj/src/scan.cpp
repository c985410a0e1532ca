#include "simplecubic/scan.hpp"

#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace simplecubic {

namespace {

constexpr std::uint64_t kBlockSize = 256;

using Block = std::vector<AnalysisRecord>;

Block run_block(const ScanOptions& options, const Integer& first, std::uint64_t count) {
  Block out;
  Integer t = first;
  for (std::uint64_t i = 0; i < count; ++i, ++t) {
    AnalysisRecord r = analyze(t, options.analyze);
    if (!options.keep || options.keep(r)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

unsigned default_jobs() {
  if (const char* env = std::getenv("SIMPLECUBIC_JOBS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void scan(const ScanOptions& options, const std::function<void(const AnalysisRecord&)>& emit) {
  if (options.lo < -1 || options.hi < options.lo)
    throw std::invalid_argument("scan: need -1 <= lo <= hi, got [" + options.lo.get_str() + ", " +
                                options.hi.get_str() + "]");
  const Integer span = options.hi - options.lo + 1;
  if (!fits_uint64(span)) throw std::invalid_argument("scan: range too large");
  const std::uint64_t total = to_uint64(span);
  const std::uint64_t blocks = (total + kBlockSize - 1) / kBlockSize;
  auto block_start = [&](std::uint64_t b) -> Integer { return options.lo + from_uint64(b * kBlockSize); };
  auto block_len = [&](std::uint64_t b) { return std::min(kBlockSize, total - b * kBlockSize); };

  if (options.jobs <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      for (const auto& r : run_block(options, block_start(b), block_len(b))) emit(r);
    }
    return;
  }

  // Workers claim blocks in order but may finish out of order; the caller's
  // thread emits block b only once all blocks before it are emitted. Claims
  // stay within a window ahead of the emitter to bound memory.
  const std::uint64_t window = 4ull * options.jobs;
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, Block> finished;
  std::uint64_t next_claim = 0, next_emit = 0;
  std::exception_ptr failure;
  bool stop = false;

  auto worker = [&] {
    while (true) {
      std::uint64_t b;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || next_claim >= blocks || next_claim < next_emit + window; });
        if (stop || next_claim >= blocks) return;
        b = next_claim++;
      }
      Block result;
      try {
        result = run_block(options, block_start(b), block_len(b));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      finished.emplace(b, std::move(result));
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(options.jobs);
  for (unsigned i = 0; i < options.jobs; ++i) pool.emplace_back(worker);

  std::exception_ptr emit_failure;
  while (next_emit < blocks) {
    Block ready;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return failure || finished.count(next_emit) > 0; });
      if (failure) break;
      ready = std::move(finished.at(next_emit));
      finished.erase(next_emit);
      ++next_emit;
      cv.notify_all();
    }
    try {
      for (const auto& r : ready) emit(r);
    } catch (...) {
      emit_failure = std::current_exception();
      std::lock_guard lock(mu);
      stop = true;
      cv.notify_all();
      break;
    }
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  if (emit_failure) std::rethrow_exception(emit_failure);
}

std::vector<AnalysisRecord> scan_collect(const ScanOptions& options) {
  std::vector<AnalysisRecord> out;
  scan(options, [&](const AnalysisRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace simplecubic

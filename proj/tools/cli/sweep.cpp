#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "usage_error.hpp"

namespace wedgeqed::cli {

void SweepSpec::check() const {
  if (!(start < stop)) throw UsageError("sweep over " + variable + ": need --start < --stop");
  if (points < 2) throw UsageError("sweep over " + variable + ": need --points >= 2");
}

std::vector<double> SweepSpec::values() const {
  check();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = start + i * step;
  out.back() = stop;
  return out;
}

std::vector<Row> evaluate_rows(std::size_t n, int jobs, const std::function<Row(std::size_t)>& f) {
  std::vector<Row> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace wedgeqed::cli

#include "molandscape/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace molandscape {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  if (workers == 0) workers = default_workers();
  const std::size_t chunks = std::min<std::size_t>(workers, n);
  if (chunks <= 1) {
    body(0, n);
    return;
  }

  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks - 1);
  const auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    try {
      body(begin, end);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  for (std::size_t c = 1; c < chunks; ++c) threads.emplace_back(run_chunk, c);
  run_chunk(0);
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace molandscape

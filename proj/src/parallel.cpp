#include "gridlink/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gridlink {

int configured_threads() {
  int threads = 0;
  if (const char* env = std::getenv("GRIDLINK_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (const std::exception&) {
      threads = 0;
    }
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(threads, 1);
}

}  // namespace gridlink

#include "qfgaps/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qfg {
namespace {

unsigned initial_threads() {
  if (const char* env = std::getenv("QFG_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> value{initial_threads()};
  return value;
}

}  // namespace

unsigned default_threads() { return thread_setting().load(); }

void set_default_threads(unsigned n) { thread_setting().store(n ? n : 1); }

}  // namespace qfg

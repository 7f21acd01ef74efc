#include "hitkit/parallel.hpp"

namespace hitkit {

namespace {
std::atomic<unsigned> g_workers{1};
}

void set_worker_limit(unsigned workers) { g_workers.store(workers == 0 ? 1 : workers); }

unsigned worker_limit() { return g_workers.load(); }

}  // namespace hitkit

#include "clusterlab/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

#include "clusterlab/errors.hpp"

namespace clusterlab {

int resolve_jobs(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw ArgumentError("jobs must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("CLUSTERLAB_JOBS"); env && *env) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ArgumentError(std::string("CLUSTERLAB_JOBS must be a positive integer, got '") + env + "'");
  }
  return omp_get_num_procs();
}

void set_jobs(int jobs) { omp_set_num_threads(jobs < 1 ? 1 : jobs); }

int current_jobs() { return omp_get_max_threads(); }

}  // namespace clusterlab

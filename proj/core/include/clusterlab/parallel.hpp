#pragma once

#include <optional>

namespace clusterlab {

// Flag value, else CLUSTERLAB_JOBS, else the hardware thread count.
int resolve_jobs(std::optional<int> flag);
void set_jobs(int jobs);
int current_jobs();

}  // namespace clusterlab

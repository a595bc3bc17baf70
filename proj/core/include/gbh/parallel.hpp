#pragma once

#include <cstddef>
#include <functional>

namespace gbh {

// GBH_JOBS environment variable, else 1
unsigned default_jobs();

// Index-parallel fan-out; results must be written to disjoint slots so
// assembly order stays deterministic. Serial when jobs <= 1.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace gbh

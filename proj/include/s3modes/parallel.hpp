#pragma once

#include <functional>

namespace s3modes {

/// Worker count: S3MODES_THREADS when set and positive, otherwise the
/// hardware concurrency (0 means auto).
int thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; each writes
/// only its own output slot, so results do not depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace s3modes

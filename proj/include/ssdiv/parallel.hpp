#pragma once

namespace ssdiv {

/// Worker count to use: `requested` if positive, else $SSDIV_WORKERS if set
/// and positive, else the OpenMP default.
int resolve_workers(int requested = 0);

}  // namespace ssdiv

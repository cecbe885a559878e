#pragma once

#include <cstdint>

#include "ssdiv/ask_engine.hpp"
#include "ssdiv/fractal.hpp"

/// Single-threaded reference kernels. They share no code paths with the
/// OpenMP engines beyond dwell() and pixel_to_complex(), and exist to check
/// them.
namespace ssdiv::reference {

DwellGrid exhaustive_render_serial(std::int64_t n, const Viewport& vp, Dwell d_max);

/// Depth-first Mariani-Silver with the same stopping rule as the engines.
/// Checks every border pixel (no early exit).
DwellGrid mariani_silver_serial(std::int64_t n, const Viewport& vp, Dwell d_max,
                                std::int64_t g, std::int64_t r, std::int64_t B);

}  // namespace ssdiv::reference

#include "ssdiv/linearize.hpp"

#include <stdexcept>
#include <string>

#include "ssdiv/cost_model.hpp"

namespace ssdiv {

void GridDims::validate() const {
  if (dims.empty()) throw InvalidParams("GridDims: need at least one axis");
  for (auto extent : dims)
    if (extent < 1) throw InvalidParams("GridDims: every extent must be >= 1");
}

std::int64_t GridDims::volume() const {
  validate();
  std::int64_t v = 1;
  for (auto extent : dims) v *= extent;
  return v;
}

std::int64_t canonical_index(std::span<const std::int64_t> p, const GridDims& dims) {
  dims.validate();
  if (p.size() != dims.rank())
    throw std::out_of_range("canonical_index: coordinate rank " + std::to_string(p.size()) +
                            " != grid rank " + std::to_string(dims.rank()));
  std::int64_t index = 0;
  std::int64_t stride = 1;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] < 0 || p[d] >= dims.dims[d])
      throw std::out_of_range("canonical_index: coordinate " + std::to_string(d) + " out of range");
    index += p[d] * stride;
    stride *= dims.dims[d];
  }
  return index;
}

std::vector<std::int64_t> canonical_inverse(std::int64_t s, const GridDims& dims) {
  if (s < 0 || s >= dims.volume()) throw std::out_of_range("canonical_inverse: index out of range");
  std::vector<std::int64_t> p(dims.rank());
  for (std::size_t d = 0; d < dims.rank(); ++d) {
    p[d] = s % dims.dims[d];
    s /= dims.dims[d];
  }
  return p;
}

std::int64_t olt_size_k(std::int64_t active_regions, std::span<const std::int64_t> r) {
  if (active_regions < 0) throw InvalidParams("olt_size_k: negative region count");
  std::int64_t slots = active_regions;
  for (auto split : r) {
    if (split < 1) throw InvalidParams("olt_size_k: subdivision factors must be >= 1");
    slots *= split;
  }
  return slots;
}

}  // namespace ssdiv

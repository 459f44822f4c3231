#pragma once

// Naive scan of every integer vector in a box, used to check the faster
// enumerations in the library.

#include <functional>

#include "kul/rational.hpp"

namespace oracle {

inline void scan_box(std::size_t n, long box, const std::function<void(const kul::IntVector&)>& f) {
  kul::IntVector v(n, kul::Integer(-box));
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == box) v[i++] = -box;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace oracle

#pragma once

#include <cstddef>
#include <span>

namespace qps {

/// In place: f[S] <- sum over T subset of S of f[T]. Size must be a power of two.
template <class T>
void zeta_transform(std::span<T> f) {
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] += f[s ^ bit];
    }
  }
}

/// Inverse of zeta_transform.
template <class T>
void mobius_transform(std::span<T> f) {
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] -= f[s ^ bit];
    }
  }
}

}  // namespace qps

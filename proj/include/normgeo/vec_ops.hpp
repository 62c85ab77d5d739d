#pragma once

#include "normgeo/norm.hpp"

namespace normgeo {

inline Vector vec_add(const Vector& x, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

inline Vector vec_sub(const Vector& x, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline Vector vec_scale(const Vector& x, double c) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
  return z;
}

/// x/dx + y/dy, divisions written as in the defining formulas.
inline Vector scaled_sum(const Vector& x, double dx, const Vector& y,
                         double dy) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] / dx + y[i] / dy;
  return z;
}

/// x/dx - y/dy.
inline Vector scaled_diff(const Vector& x, double dx, const Vector& y,
                          double dy) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] / dx - y[i] / dy;
  return z;
}

}  // namespace normgeo

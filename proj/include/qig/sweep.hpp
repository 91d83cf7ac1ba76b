#pragma once

// Grid-sweep kernels. Every point evaluation is pure, so sweeps are data
// parallel; the OpenMP kernel gathers results by grid index and is
// bit-identical to the serial reference, which is kept for testing and
// benchmarking.

#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qig {

template <typename Point, typename Result>
std::vector<Result> sweep_serial(
    const std::vector<Point>& points,
    const std::function<Result(const Point&)>& eval) {
  std::vector<Result> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = eval(points[i]);
  return out;
}

template <typename Point, typename Result>
std::vector<Result> sweep_parallel(
    const std::vector<Point>& points,
    const std::function<Result(const Point&)>& eval) {
  std::vector<Result> out(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(points.size()); ++i)
    out[static_cast<size_t>(i)] = eval(points[static_cast<size_t>(i)]);
  return out;
}

}  // namespace qig

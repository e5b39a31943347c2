// Copyright 2026 The numdenorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numdenorm/kernels.hpp"

#include <cstdint>

namespace numdenorm::kernels {

template <typename T>
void matvec_serial(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    T acc = T(0);
    const T* row = a + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

template <typename T>
void matvec_parallel(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
    T acc = T(0);
    const T* row = a + static_cast<std::size_t>(r) * cols;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

template <typename T>
void matvec(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
  if (rows * cols >= kParallelCutoff) {
    matvec_parallel(a, x, y, rows, cols);
  } else {
    matvec_serial(a, x, y, rows, cols);
  }
}

template <typename T>
void matvec_t_acc_serial(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
  for (std::size_t c = 0; c < cols; ++c) {
    T acc = T(0);
    for (std::size_t r = 0; r < rows; ++r) acc += a[r * cols + c] * x[r];
    y[c] += acc;
  }
}

template <typename T>
void matvec_t_acc_parallel(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(cols); ++c) {
    T acc = T(0);
    for (std::size_t r = 0; r < rows; ++r) acc += a[r * cols + static_cast<std::size_t>(c)] * x[r];
    y[c] += acc;
  }
}

template <typename T>
void matvec_t_acc(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols) {
  if (rows * cols >= kParallelCutoff) {
    matvec_t_acc_parallel(a, x, y, rows, cols);
  } else {
    matvec_t_acc_serial(a, x, y, rows, cols);
  }
}

template <typename T>
void ger_acc_serial(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    T* row = a + r * cols;
    const T gr = g[r];
    for (std::size_t c = 0; c < cols; ++c) row[c] += gr * x[c];
  }
}

template <typename T>
void ger_acc_parallel(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
    T* row = a + static_cast<std::size_t>(r) * cols;
    const T gr = g[r];
    for (std::size_t c = 0; c < cols; ++c) row[c] += gr * x[c];
  }
}

template <typename T>
void ger_acc(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols) {
  if (rows * cols >= kParallelCutoff) {
    ger_acc_parallel(a, g, x, rows, cols);
  } else {
    ger_acc_serial(a, g, x, rows, cols);
  }
}

template <typename T>
void matmul_serial(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc = T(0);
      for (std::size_t k = 0; k < k0; ++k) acc += a[i * k0 + k] * b[k * n + j];
      c[i * n + j] = acc;
    }
  }
}

template <typename T>
void matmul_parallel(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc = T(0);
      for (std::size_t k = 0; k < k0; ++k)
        acc += a[static_cast<std::size_t>(i) * k0 + k] * b[k * n + j];
      c[static_cast<std::size_t>(i) * n + j] = acc;
    }
  }
}

template <typename T>
void matmul(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n) {
  if (m * k0 * n >= kParallelCutoff) {
    matmul_parallel(a, b, c, m, k0, n);
  } else {
    matmul_serial(a, b, c, m, k0, n);
  }
}

template <typename T>
void axpy_serial(T alpha, const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
void axpy_parallel(T alpha, const T* x, T* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) y[i] += alpha * x[i];
}

template <typename T>
void axpy(T alpha, const T* x, T* y, std::size_t n) {
  if (n >= kParallelCutoff) {
    axpy_parallel(alpha, x, y, n);
  } else {
    axpy_serial(alpha, x, y, n);
  }
}

#define NUMDENORM_INSTANTIATE(T)                                                              \
  template void matvec_serial<T>(const T*, const T*, T*, std::size_t, std::size_t);           \
  template void matvec_parallel<T>(const T*, const T*, T*, std::size_t, std::size_t);         \
  template void matvec<T>(const T*, const T*, T*, std::size_t, std::size_t);                  \
  template void matvec_t_acc_serial<T>(const T*, const T*, T*, std::size_t, std::size_t);     \
  template void matvec_t_acc_parallel<T>(const T*, const T*, T*, std::size_t, std::size_t);   \
  template void matvec_t_acc<T>(const T*, const T*, T*, std::size_t, std::size_t);            \
  template void ger_acc_serial<T>(T*, const T*, const T*, std::size_t, std::size_t);          \
  template void ger_acc_parallel<T>(T*, const T*, const T*, std::size_t, std::size_t);        \
  template void ger_acc<T>(T*, const T*, const T*, std::size_t, std::size_t);                 \
  template void matmul_serial<T>(const T*, const T*, T*, std::size_t, std::size_t,            \
                                 std::size_t);                                                \
  template void matmul_parallel<T>(const T*, const T*, T*, std::size_t, std::size_t,          \
                                   std::size_t);                                              \
  template void matmul<T>(const T*, const T*, T*, std::size_t, std::size_t, std::size_t);     \
  template void axpy_serial<T>(T, const T*, T*, std::size_t);                                 \
  template void axpy_parallel<T>(T, const T*, T*, std::size_t);                               \
  template void axpy<T>(T, const T*, T*, std::size_t);

NUMDENORM_INSTANTIATE(float)
NUMDENORM_INSTANTIATE(double)

#undef NUMDENORM_INSTANTIATE

}  // namespace numdenorm::kernels

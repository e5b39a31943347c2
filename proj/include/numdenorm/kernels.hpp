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

#ifndef NUMDENORM_KERNELS_HPP
#define NUMDENORM_KERNELS_HPP

#include <cstddef>

// Dense kernels behind the tensor/autodiff layer. Each kernel has a serial
// reference implementation and an OpenMP one parallelized over output rows;
// every output element is produced by exactly one thread with a serial inner
// loop, so both variants give bit-identical results and the dispatcher may
// switch freely on problem size.

namespace numdenorm::kernels {

// Work threshold (rows*cols) below which the dispatcher stays serial.
inline constexpr std::size_t kParallelCutoff = 1u << 15;

// y[r] = sum_c a[r*cols+c] * x[c]
template <typename T>
void matvec_serial(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);
template <typename T>
void matvec_parallel(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);
template <typename T>
void matvec(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);

// y[c] += sum_r a[r*cols+c] * x[r]  (A^T x, accumulating)
template <typename T>
void matvec_t_acc_serial(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);
template <typename T>
void matvec_t_acc_parallel(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);
template <typename T>
void matvec_t_acc(const T* a, const T* x, T* y, std::size_t rows, std::size_t cols);

// a[r*cols+c] += g[r] * x[c]  (rank-1 accumulate)
template <typename T>
void ger_acc_serial(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols);
template <typename T>
void ger_acc_parallel(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols);
template <typename T>
void ger_acc(T* a, const T* g, const T* x, std::size_t rows, std::size_t cols);

// c[r*n+j] = sum_k a[r*k0+k] * b[k*n+j]
template <typename T>
void matmul_serial(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n);
template <typename T>
void matmul_parallel(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n);
template <typename T>
void matmul(const T* a, const T* b, T* c, std::size_t m, std::size_t k0, std::size_t n);

// y[i] += alpha * x[i]
template <typename T>
void axpy_serial(T alpha, const T* x, T* y, std::size_t n);
template <typename T>
void axpy_parallel(T alpha, const T* x, T* y, std::size_t n);
template <typename T>
void axpy(T alpha, const T* x, T* y, std::size_t n);

}  // namespace numdenorm::kernels

#endif  // NUMDENORM_KERNELS_HPP

// src/fft.cpp

// Copyright 2026 the sepcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "sepcs/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace sepcs::fft {

namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

// Plan creation is the only non-thread-safe FFTW entry point we use.
PlanPair plans_for(int n) {
  static std::mutex mu;
  static std::map<int, PlanPair>* cache = new std::map<int, PlanPair>();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;

  std::vector<double> re(static_cast<std::size_t>(n));
  std::vector<cplx> cx(static_cast<std::size_t>(n / 2 + 1));
  PlanPair p;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.r2c = fftw_plan_dft_r2c_1d(n, re.data(),
                               reinterpret_cast<fftw_complex*>(cx.data()), flags);
  p.c2r = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(cx.data()),
                               re.data(), flags);
  if (p.r2c == nullptr || p.c2r == nullptr)
    throw Error("fft: plan creation failed for n=" + std::to_string(n));
  (*cache)[n] = p;
  return p;
}

struct Scratch {
  std::vector<double> re;
  std::vector<cplx> cx;
};

Scratch& scratch_for(int n) {
  thread_local std::map<int, Scratch> s;
  Scratch& sc = s[n];
  sc.re.resize(static_cast<std::size_t>(n));
  sc.cx.resize(static_cast<std::size_t>(n / 2 + 1));
  return sc;
}

}  // namespace

void rfft(int n, const double* in, cplx* out) {
  if (n <= 0 || n % 2 != 0) throw Error("fft: size must be positive and even");
  PlanPair p = plans_for(n);
  Scratch& sc = scratch_for(n);
  for (int i = 0; i < n; ++i) sc.re[static_cast<std::size_t>(i)] = in[i];
  fftw_execute_dft_r2c(p.r2c, sc.re.data(), reinterpret_cast<fftw_complex*>(out));
}

void irfft(int n, const cplx* in, double* out) {
  if (n <= 0 || n % 2 != 0) throw Error("fft: size must be positive and even");
  PlanPair p = plans_for(n);
  Scratch& sc = scratch_for(n);
  const int k = n / 2 + 1;
  for (int i = 0; i < k; ++i) sc.cx[static_cast<std::size_t>(i)] = in[i];
  // c2r destroys its input and the DC/Nyquist imaginary parts have no effect
  // on a real signal; zero them in the scratch copy for a pinned convention.
  sc.cx[0] = cplx(sc.cx[0].real(), 0.0);
  sc.cx[static_cast<std::size_t>(k - 1)] =
      cplx(sc.cx[static_cast<std::size_t>(k - 1)].real(), 0.0);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(sc.cx.data()), out);
  const double scale = 1.0 / static_cast<double>(n);
  for (int i = 0; i < n; ++i) out[i] *= scale;
}

}  // namespace sepcs::fft

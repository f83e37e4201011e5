// sepcs/fft.hpp

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

#pragma once

#include <cstddef>

#include "sepcs/types.hpp"

// Thin wrapper over FFTW double precision. Plans are cached per transform
// size and created under a lock; execution uses the new-array interface and
// is safe from any number of threads.

namespace sepcs::fft {

/// Forward real FFT, unnormalized: out[k] = sum_n in[n] e^{-2πikn/N},
/// k = 0..n/2. `n` must be even and positive.
void rfft(int n, const double* in, cplx* out);

/// Inverse of rfft with 1/n normalization. The imaginary parts of the DC and
/// Nyquist entries are ignored (the output is real by construction).
void irfft(int n, const cplx* in, double* out);

}  // namespace sepcs::fft

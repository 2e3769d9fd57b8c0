// Copyright 2026 The CSM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm {

Context standard_context(int dim, std::string label = "standard");

/// F_{jk} = ω^{jk} / √N with ω = e^{2πi/N}.
ComplexMatrix fourier_matrix(int dim);
Context fourier_context(int dim, std::string label = "fourier");

/// The p + 1 mutually unbiased bases of an odd prime dimension p: the
/// standard basis followed by v_{k,j}(m) = ω^{k m² + j m} / √p, k = 0..p−1.
/// Throws InvalidArgument when p is not an odd prime.
std::vector<Context> prime_mub_contexts(int p);

/// Superposition rays (e₁ + e_k)/√2 and (e₁ + i e_k)/√2, k = 2..N, built from
/// the representatives of `fiduciary`. Returned as [real rays..., imaginary rays...].
std::vector<ComplexVector> phase_gadget_vectors(const Context &fiduciary);

/// N² rays whose projectors span the Hermitian matrices: the standard basis
/// plus (e_j + e_k)/√2 and (e_j + i e_k)/√2 for every j < k.
std::vector<Projector> pair_ray_family(int dim);

} // namespace csm

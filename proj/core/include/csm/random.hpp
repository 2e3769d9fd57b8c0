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

#include "csm/model.hpp"
#include "csm/rng.hpp"

/// Seeded random instances for tests, benchmarks and dataset generation.
namespace csm::random {

ComplexVector unit_vector(int dim, RngStream &rng);

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
ComplexMatrix unitary(int dim, RngStream &rng);

/// A + A† with A complex Ginibre.
ComplexMatrix hermitian(int dim, RngStream &rng);

/// G G† / Tr(G G†), full rank with probability one.
DensityOperator density(int dim, RngStream &rng);

Context context(int dim, RngStream &rng, std::string label = "random");

} // namespace csm::random

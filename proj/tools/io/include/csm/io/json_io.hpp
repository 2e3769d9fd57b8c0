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

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "csm/gleason.hpp"
#include "csm/model.hpp"
#include "csm/partition.hpp"
#include "csm/topology.hpp"
#include "csm/uhlhorn.hpp"

/// JSON codecs for the file formats read and written by the csm tool.
/// Complex scalars are [re, im] pairs; a bare number x is accepted as [x, 0].
/// Structural problems raise Error(MalformedDocument).
namespace csm::io {

using Json = nlohmann::json;

Json load_json_file(const std::filesystem::path &path);

Complex parse_complex(const Json &j);
ComplexVector parse_vector(const Json &j, int expected_dim = -1);
ComplexMatrix parse_matrix(const Json &j, int expected_dim = -1);

Json to_json(Complex z);
Json to_json(const ComplexVector &v);
Json to_json(const ComplexMatrix &m);

/// {"dim": N, "label": str, "vectors": [[[re,im]×N]×N]}
Context parse_context(const Json &j, const Tolerance &tol = {});
Json to_json(const Context &c);

/// Either a single context object or {"contexts": [context, ...]}.
std::vector<Context> parse_context_list(const Json &j, const Tolerance &tol = {});

/// {"dim": N, "matrix": [[[re,im]×N]×N]}
DensityOperator parse_density(const Json &j, const Tolerance &tol = {});
Json to_json(const DensityOperator &rho);

/// {"dim": N, "vector": [[re,im]×N]}
Projector parse_projector(const Json &j);

/// {"dim": N, "samples": [{"vector": [...], "value": x}, ...]}
std::vector<gleason::FrameSample> parse_frame_samples(const Json &j);

/// {"contexts": [{"label": str, "vectors": [...], "values": [...]}, ...]}
std::vector<gleason::ContextValues> parse_context_values(const Json &j, const Tolerance &tol = {});

/// {"dim": N, "pairs": [{"source": [...], "target": [...]}],
///  "covering_contexts": [label | [[...]×N] | context object],
///  "contexts": [context object, ...]}   (optional; resolves labels)
uhlhorn::RayMap parse_raymap(const Json &j, const Tolerance &tol = {});

/// {"dim": d, "vectors": [[...]×M], "bases": [[i, ...]×B]}
partition::KsDocument parse_ks_document(const Json &j);
Json to_json(const partition::KsInstance &inst);

/// {"n": n, "images": [σ(0), ..., σ(n−1)]}
topology::Permutation parse_permutation(const Json &j);
Json to_json(const topology::Permutation &sigma);

} // namespace csm::io

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

#include "csm/io/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "csm/error.hpp"

namespace csm::io {
namespace {

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorKind::MalformedDocument, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object()) {
        malformed(std::string("expected an object holding \"") + key + "\"");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        malformed(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

const Json &array_field(const Json &j, const char *key) {
    const Json &a = field(j, key);
    if (!a.is_array()) {
        malformed(std::string("field \"") + key + "\" must be an array");
    }
    return a;
}

long long integer(const Json &j, const char *what) {
    if (!j.is_number_integer()) {
        malformed(std::string(what) + " must be an integer");
    }
    return j.get<long long>();
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        malformed(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

int dimension(const Json &j) {
    const long long d = integer(field(j, "dim"), "dim");
    if (d <= 0 || d > 4096) {
        malformed("dim " + std::to_string(d) + " out of range");
    }
    return static_cast<int>(d);
}

std::vector<ComplexVector> parse_vectors(const Json &j, int expected_dim) {
    if (!j.is_array()) {
        malformed("vector list must be an array");
    }
    std::vector<ComplexVector> out;
    for (const auto &v : j) {
        out.push_back(parse_vector(v, expected_dim));
    }
    return out;
}

} // namespace

Json load_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        malformed("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        malformed(path.string() + ": " + e.what());
    }
}

Complex parse_complex(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    malformed("complex scalar must be [re, im] or a number, got " + j.dump());
}

ComplexVector parse_vector(const Json &j, int expected_dim) {
    if (!j.is_array() || j.empty()) {
        malformed("vector must be a nonempty array");
    }
    if (expected_dim >= 0 && j.size() != static_cast<std::size_t>(expected_dim)) {
        malformed("vector has " + std::to_string(j.size()) + " entries, expected " +
                  std::to_string(expected_dim));
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = parse_complex(j[i]);
    }
    if (!v.allFinite()) {
        malformed("vector has non-finite entries");
    }
    return v;
}

ComplexMatrix parse_matrix(const Json &j, int expected_dim) {
    if (!j.is_array() || j.empty()) {
        malformed("matrix must be a nonempty array of rows");
    }
    const int n = expected_dim >= 0 ? expected_dim : static_cast<int>(j.size());
    if (j.size() != static_cast<std::size_t>(n)) {
        malformed("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(n));
    }
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        m.row(r) = parse_vector(j[static_cast<std::size_t>(r)], n).transpose();
    }
    return m;
}

Json to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json to_json(const ComplexVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(to_json(v(i)));
    }
    return out;
}

Json to_json(const ComplexMatrix &m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(to_json(ComplexVector(m.row(r).transpose())));
    }
    return out;
}

Context parse_context(const Json &j, const Tolerance &tol) {
    const auto &raw = array_field(j, "vectors");
    const int n = j.contains("dim") ? dimension(j) : static_cast<int>(raw.size());
    if (raw.size() != static_cast<std::size_t>(n)) {
        malformed("context lists " + std::to_string(raw.size()) + " vectors for dim " +
                  std::to_string(n));
    }
    std::string label = "context";
    if (j.contains("label")) {
        if (!j["label"].is_string()) {
            malformed("context label must be a string");
        }
        label = j["label"].get<std::string>();
    }
    return make_context(parse_vectors(raw, n), std::move(label), tol);
}

Json to_json(const Context &c) {
    Json vectors = Json::array();
    for (const auto &p : c.projectors()) {
        vectors.push_back(to_json(p.representative()));
    }
    return Json{{"dim", c.dim()}, {"label", c.label()}, {"vectors", vectors}};
}

std::vector<Context> parse_context_list(const Json &j, const Tolerance &tol) {
    std::vector<Context> out;
    if (j.is_object() && j.contains("contexts")) {
        for (const auto &c : array_field(j, "contexts")) {
            out.push_back(parse_context(c, tol));
        }
    } else {
        out.push_back(parse_context(j, tol));
    }
    if (out.empty()) {
        malformed("context list is empty");
    }
    return out;
}

DensityOperator parse_density(const Json &j, const Tolerance &tol) {
    const int n = dimension(j);
    return DensityOperator::from_matrix(parse_matrix(field(j, "matrix"), n), tol);
}

Json to_json(const DensityOperator &rho) {
    return Json{{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

Projector parse_projector(const Json &j) {
    const int n = dimension(j);
    return Projector::from_ray(parse_vector(field(j, "vector"), n));
}

std::vector<gleason::FrameSample> parse_frame_samples(const Json &j) {
    const int n = dimension(j);
    std::vector<gleason::FrameSample> out;
    for (const auto &s : array_field(j, "samples")) {
        out.push_back({Projector::from_ray(parse_vector(field(s, "vector"), n)),
                       number(field(s, "value"), "sample value")});
    }
    if (out.empty()) {
        malformed("no samples");
    }
    return out;
}

std::vector<gleason::ContextValues> parse_context_values(const Json &j, const Tolerance &tol) {
    std::vector<gleason::ContextValues> out;
    for (const auto &entry : array_field(j, "contexts")) {
        std::vector<double> values;
        for (const auto &v : array_field(entry, "values")) {
            values.push_back(number(v, "frame value"));
        }
        out.push_back({parse_context(entry, tol), std::move(values)});
    }
    return out;
}

uhlhorn::RayMap parse_raymap(const Json &j, const Tolerance &tol) {
    const int n = dimension(j);
    std::vector<uhlhorn::RayPair> pairs;
    for (const auto &p : array_field(j, "pairs")) {
        pairs.push_back({Projector::from_ray(parse_vector(field(p, "source"), n)),
                         Projector::from_ray(parse_vector(field(p, "target"), n))});
    }
    std::map<std::string, Context> named;
    if (j.contains("contexts")) {
        for (const auto &c : array_field(j, "contexts")) {
            auto ctx = parse_context(c, tol);
            const std::string label = ctx.label();
            named.insert_or_assign(label, std::move(ctx));
        }
    }
    std::vector<Context> covering;
    if (j.contains("covering_contexts")) {
        const auto &list = array_field(j, "covering_contexts");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto &entry = list[i];
            if (entry.is_string()) {
                const auto it = named.find(entry.get<std::string>());
                if (it == named.end()) {
                    malformed("covering context label \"" + entry.get<std::string>() +
                              "\" is not defined under \"contexts\"");
                }
                covering.push_back(it->second);
            } else if (entry.is_object()) {
                covering.push_back(parse_context(entry, tol));
            } else {
                covering.push_back(make_context(parse_vectors(entry, n),
                                                "covering-" + std::to_string(i), tol));
            }
        }
    }
    return uhlhorn::RayMap::make(std::move(pairs), std::move(covering), tol);
}

partition::KsDocument parse_ks_document(const Json &j) {
    partition::KsDocument doc;
    doc.dim = dimension(j);
    doc.vectors = parse_vectors(array_field(j, "vectors"), doc.dim);
    for (const auto &b : array_field(j, "bases")) {
        if (!b.is_array()) {
            malformed("each basis must be an array of vector indices");
        }
        std::vector<long long> basis;
        for (const auto &idx : b) {
            basis.push_back(integer(idx, "basis index"));
        }
        doc.bases.push_back(std::move(basis));
    }
    return doc;
}

Json to_json(const partition::KsInstance &inst) {
    Json vectors = Json::array();
    for (const auto &v : inst.vectors()) {
        vectors.push_back(to_json(v));
    }
    return Json{{"dim", inst.dim()}, {"vectors", vectors}, {"bases", inst.bases()}};
}

topology::Permutation parse_permutation(const Json &j) {
    const long long n = integer(field(j, "n"), "n");
    const auto &raw = array_field(j, "images");
    if (n <= 0 || raw.size() != static_cast<std::size_t>(n)) {
        malformed("permutation needs exactly n images");
    }
    std::vector<int> images;
    for (const auto &x : raw) {
        const long long v = integer(x, "image");
        if (v < 0 || v >= n) {
            malformed("image " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        }
        images.push_back(static_cast<int>(v));
    }
    try {
        return topology::Permutation::make(std::move(images));
    } catch (const Error &e) {
        malformed(e.detail());
    }
}

Json to_json(const topology::Permutation &sigma) {
    return Json{{"n", sigma.n()}, {"images", sigma.images()}};
}

} // namespace csm::io

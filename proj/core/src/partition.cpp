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

#include "csm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csm/error.hpp"

namespace csm::partition {
namespace {

class Solver {
  public:
    explicit Solver(const KsInstance &inst) : inst_(inst), value_(inst.vector_count(), kUnset) {
        const auto m = inst.vector_count();
        bases_of_.resize(m);
        for (std::size_t b = 0; b < inst.basis_count(); ++b) {
            for (auto v : inst.bases()[b]) {
                bases_of_[v].push_back(b);
            }
        }
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return bases_of_[a].size() > bases_of_[b].size();
        });
    }

    // Explores the whole tree; `on_solution` returns false to stop.
    template <typename OnSolution> void run(OnSolution &&on_solution) {
        stop_ = false;
        descend(0, on_solution);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    std::vector<std::uint8_t> snapshot() const {
        std::vector<std::uint8_t> out(value_.size());
        for (std::size_t i = 0; i < value_.size(); ++i) {
            out[i] = static_cast<std::uint8_t>(value_[i] == 1);
        }
        return out;
    }

  private:
    static constexpr std::int8_t kUnset = -1;

    template <typename OnSolution> void descend(std::size_t cursor, OnSolution &on_solution) {
        while (cursor < order_.size() && value_[order_[cursor]] != kUnset) {
            ++cursor;
        }
        if (cursor == order_.size()) {
            if (!on_solution(*this)) {
                stop_ = true;
            }
            return;
        }
        const auto var = order_[cursor];
        for (std::int8_t val : {std::int8_t{1}, std::int8_t{0}}) {
            ++nodes_;
            const auto mark = trail_.size();
            if (assign(var, val)) {
                descend(cursor + 1, on_solution);
            }
            undo(mark);
            if (stop_) {
                return;
            }
        }
    }

    bool assign(std::size_t var, std::int8_t val) {
        std::vector<std::size_t> queue{var};
        set(var, val);
        while (!queue.empty()) {
            const auto v = queue.back();
            queue.pop_back();
            for (auto b : bases_of_[v]) {
                int ones = 0;
                std::size_t unset = 0;
                std::size_t last_unset = 0;
                for (auto w : inst_.bases()[b]) {
                    if (value_[w] == 1) {
                        ++ones;
                    } else if (value_[w] == kUnset) {
                        ++unset;
                        last_unset = w;
                    }
                }
                if (ones > 1 || (ones == 0 && unset == 0)) {
                    return false;
                }
                if (ones == 1) {
                    for (auto w : inst_.bases()[b]) {
                        if (value_[w] == kUnset) {
                            set(w, 0);
                            queue.push_back(w);
                        }
                    }
                } else if (unset == 1) {
                    set(last_unset, 1);
                    queue.push_back(last_unset);
                }
            }
        }
        return true;
    }

    void set(std::size_t var, std::int8_t val) {
        value_[var] = val;
        trail_.push_back(var);
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
    }

    const KsInstance &inst_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::size_t>> bases_of_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> trail_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
};

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorKind::MalformedDocument, what);
}

} // namespace

std::vector<int> KsInstance::multiplicities() const {
    std::vector<int> count(vectors_.size(), 0);
    for (const auto &basis : bases_) {
        for (auto v : basis) {
            ++count[v];
        }
    }
    return count;
}

KsInstance load_ks_instance(const KsDocument &doc, const Tolerance &tol) {
    if (doc.dim <= 0) {
        malformed("dim must be positive");
    }
    if (doc.vectors.empty()) {
        malformed("instance has no vectors");
    }
    if (doc.bases.empty()) {
        malformed("instance has no bases");
    }
    KsInstance inst;
    inst.dim_ = doc.dim;
    for (std::size_t i = 0; i < doc.vectors.size(); ++i) {
        const auto &v = doc.vectors[i];
        if (v.size() != doc.dim) {
            malformed("vector " + std::to_string(i) + " has length " + std::to_string(v.size()));
        }
        if (!v.allFinite() || v.norm() == 0.0) {
            malformed("vector " + std::to_string(i) + " is zero or non-finite");
        }
        inst.vectors_.push_back(v / v.norm());
    }
    const auto m = static_cast<long long>(inst.vectors_.size());
    std::vector<bool> covered(inst.vectors_.size(), false);
    for (std::size_t b = 0; b < doc.bases.size(); ++b) {
        const auto &raw = doc.bases[b];
        if (raw.size() != static_cast<std::size_t>(doc.dim)) {
            malformed("basis " + std::to_string(b) + " has " + std::to_string(raw.size()) +
                      " entries, expected " + std::to_string(doc.dim));
        }
        std::vector<std::size_t> basis;
        for (auto idx : raw) {
            if (idx < 0 || idx >= m) {
                malformed("basis " + std::to_string(b) + " references vector " + std::to_string(idx));
            }
            const auto u = static_cast<std::size_t>(idx);
            if (std::find(basis.begin(), basis.end(), u) != basis.end()) {
                malformed("basis " + std::to_string(b) + " repeats vector " + std::to_string(idx));
            }
            basis.push_back(u);
            covered[u] = true;
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                const double overlap = std::abs(inst.vectors_[basis[i]].dot(inst.vectors_[basis[j]]));
                if (overlap > tol.abs_eps()) {
                    std::ostringstream os;
                    os << "basis " << b << ": vectors (" << basis[i] << ", " << basis[j]
                       << ") have overlap " << overlap;
                    throw Error(ErrorKind::BasisNotOrthogonal, os.str());
                }
            }
        }
        inst.bases_.push_back(std::move(basis));
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (!covered[i]) {
            malformed("vector " + std::to_string(i) + " belongs to no basis");
        }
    }
    return inst;
}

KsInstance without_basis(const KsInstance &inst, std::size_t index, const Tolerance &tol) {
    if (index >= inst.basis_count()) {
        throw Error(ErrorKind::InvalidArgument, "basis index " + std::to_string(index) + " out of range");
    }
    KsDocument doc;
    doc.dim = inst.dim();
    std::vector<long long> remap(inst.vector_count(), -1);
    for (std::size_t b = 0; b < inst.basis_count(); ++b) {
        if (b == index) {
            continue;
        }
        for (auto v : inst.bases()[b]) {
            remap[v] = 0;
        }
    }
    for (std::size_t v = 0; v < inst.vector_count(); ++v) {
        if (remap[v] == 0) {
            remap[v] = static_cast<long long>(doc.vectors.size());
            doc.vectors.push_back(inst.vectors()[v]);
        }
    }
    for (std::size_t b = 0; b < inst.basis_count(); ++b) {
        if (b == index) {
            continue;
        }
        std::vector<long long> basis;
        for (auto v : inst.bases()[b]) {
            basis.push_back(remap[v]);
        }
        doc.bases.push_back(std::move(basis));
    }
    return load_ks_instance(doc, tol);
}

std::optional<ParityCertificate> parity_certificate(const KsInstance &inst) {
    if (inst.basis_count() % 2 == 0) {
        return std::nullopt;
    }
    auto mult = inst.multiplicities();
    if (std::any_of(mult.begin(), mult.end(), [](int c) { return c % 2 != 0; })) {
        return std::nullopt;
    }
    return ParityCertificate{inst.basis_count(), std::move(mult)};
}

AssignmentResult search_assignment(const KsInstance &inst) {
    Solver solver(inst);
    std::optional<std::vector<std::uint8_t>> witness;
    solver.run([&](const Solver &s) {
        witness = s.snapshot();
        return false;
    });
    AssignmentResult result;
    result.status = witness ? SatStatus::Sat : SatStatus::Unsat;
    result.assignment = std::move(witness);
    result.nodes_explored = solver.nodes();
    result.certificate = parity_certificate(inst);
    return result;
}

std::uint64_t count_assignments(const KsInstance &inst, std::uint64_t limit) {
    Solver solver(inst);
    std::uint64_t count = 0;
    solver.run([&](const Solver &) {
        ++count;
        return count < limit;
    });
    return count;
}

bool satisfies(const KsInstance &inst, std::span<const std::uint8_t> assignment) {
    if (assignment.size() != inst.vector_count()) {
        return false;
    }
    if (std::any_of(assignment.begin(), assignment.end(), [](std::uint8_t x) { return x > 1; })) {
        return false;
    }
    return std::all_of(inst.bases().begin(), inst.bases().end(), [&](const auto &basis) {
        int ones = 0;
        for (auto v : basis) {
            ones += assignment[v];
        }
        return ones == 1;
    });
}

} // namespace csm::partition

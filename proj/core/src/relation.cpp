// Copyright 2026 The dcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcat/relation.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

#include "dcat/errors.hpp"

namespace dcat {

Relation::Relation(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod) {}

Relation::Relation(std::size_t dom, std::size_t cod, std::vector<Pair> pairs)
    : dom_(dom), cod_(cod), pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_) {
    if (i >= dom_ || j >= cod_) {
      throw DimensionMismatch("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for a relation " + std::to_string(dom_) +
                              " -> " + std::to_string(cod_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::identity(std::size_t n) {
  std::vector<Pair> ps;
  ps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ps.emplace_back(i, i);
  return Relation(n, n, std::move(ps));
}

bool Relation::contains(std::size_t i, std::size_t j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
}

Relation compose(const Relation& g, const Relation& f) {
  if (f.cod() != g.dom()) {
    throw DimensionMismatch("cannot compose " + std::to_string(g.dom()) + " -> " +
                            std::to_string(g.cod()) + " after " +
                            std::to_string(f.dom()) + " -> " + std::to_string(f.cod()));
  }
  std::vector<std::vector<std::size_t>> succ(g.dom());
  for (const auto& [j, k] : g.pairs()) succ[j].push_back(k);
  std::vector<Relation::Pair> out;
  for (const auto& [i, j] : f.pairs()) {
    for (std::size_t k : succ[j]) out.emplace_back(i, k);
  }
  return Relation(f.dom(), g.cod(), std::move(out));
}

Relation shift_union(const Relation& f, const Relation& g, std::size_t domShift,
                     std::size_t codShift) {
  if (domShift != f.dom() || codShift != f.cod()) {
    throw DimensionMismatch("shift (" + std::to_string(domShift) + ", " +
                            std::to_string(codShift) + ") does not match the left block " +
                            std::to_string(f.dom()) + " -> " + std::to_string(f.cod()));
  }
  std::vector<Relation::Pair> out = f.pairs();
  out.reserve(out.size() + g.pairs().size());
  for (const auto& [i, j] : g.pairs()) out.emplace_back(i + domShift, j + codShift);
  return Relation(f.dom() + g.dom(), f.cod() + g.cod(), std::move(out));
}

std::string to_json(const Relation& r) {
  nlohmann::ordered_json j;
  j["dom"] = r.dom();
  j["cod"] = r.cod();
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [i, k] : r.pairs()) pairs.push_back({i, k});
  j["pairs"] = std::move(pairs);
  return j.dump();
}

std::string to_dot(const Relation& r) {
  std::string out = "graph relation {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  { rank=same;";
  for (std::size_t i = 0; i < r.dom(); ++i) {
    out += " s" + std::to_string(i) + " [label=\"" + std::to_string(i) + "\"];";
  }
  out += " }\n  { rank=same;";
  for (std::size_t j = 0; j < r.cod(); ++j) {
    out += " t" + std::to_string(j) + " [label=\"" + std::to_string(j) + "\"];";
  }
  out += " }\n";
  for (const auto& [i, j] : r.pairs()) {
    out += "  s" + std::to_string(i) + " -- t" + std::to_string(j) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace dcat

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

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dcat {

// Binary relation between the finite ordinals {0..dom-1} and {0..cod-1}.
// Pairs are kept sorted and deduplicated, so equal relations compare equal
// as values and serialize identically.
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Relation(std::size_t dom, std::size_t cod);  // no pairs
  Relation(std::size_t dom, std::size_t cod, std::vector<Pair> pairs);

  static Relation identity(std::size_t n);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool contains(std::size_t i, std::size_t j) const;
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

 private:
  std::size_t dom_;
  std::size_t cod_;
  std::vector<Pair> pairs_;
};

// Relational composite of f : n -> m then g : m -> p, written g after f.
// Throws DimensionMismatch unless f.cod() == g.dom().
Relation compose(const Relation& g, const Relation& f);

// Disjoint (block) union: g's points are renumbered after f's on both sides.
// This is the graph action of both the product and the sum of arrows. The
// shifts must equal f's dimensions; they are explicit so a caller's intent
// is checkable (throws DimensionMismatch otherwise).
Relation shift_union(const Relation& f, const Relation& g, std::size_t domShift,
                     std::size_t codShift);

// {"dom":n,"cod":m,"pairs":[[i,j],...]} with the pairs in sorted order.
std::string to_json(const Relation& r);

// Graphviz rendering: source points s0..s(dom-1), target points t0..t(cod-1),
// one undirected edge per pair. Both ranks are emitted even when empty, so
// relations with equal pair sets but different dimensions render differently.
std::string to_dot(const Relation& r);

}  // namespace dcat

// Copyright 2026 The hellycert Authors
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

#ifndef HELLYCERT_CUTS_HPP
#define HELLYCERT_CUTS_HPP

#include "hellycert/certificates.hpp"
#include "hellycert/geometry.hpp"
#include "hellycert/lp.hpp"

namespace hellycert {

/// {a.x <= floor(b)} for the coprime integer normalization (a, b) of h.
inline Halfspace cg_cut(const Halfspace& h) {
  if (h.is_trivial()) throw Error("trivial halfspace has no Chvatal-Gomory cut");
  Halfspace n = normalize_integral(h);
  return Halfspace{n.normal, Rational(Integer(n.rhs.floor()))};
}

/**
 * One Chvatal-Gomory step at a node. `source_evidence` proves the source is
 * valid for the node polyhedron; `certifier` proves that the node polyhedron
 * meets no point of tighten_complement(cut).
 */
struct CutStep {
  Halfspace source;
  Halfspace cut;
  FarkasCert certifier;
  DominanceCert source_evidence;
  friend bool operator==(const CutStep&, const CutStep&) = default;
};

inline CutStep build_cut_step(const Polyhedron& node, const Halfspace& h) {
  if (h.dim() != node.dim) throw Error("dimension mismatch");
  Halfspace cut = cg_cut(h);
  DominanceOutcome dom = extract_dominance(node, h);
  if (!dom.cert) throw Error("source halfspace not valid for node");
  Polyhedron rest = intersect(node, {tighten_complement(cut, EmbeddingContext(node.dim))});
  FarkasOutcome far = extract_farkas(rest);
  if (!far.cert) throw Error("CG certifier unavailable");
  return CutStep{h, cut, *far.cert, *dom.cert};
}

}  // namespace hellycert

#endif  // HELLYCERT_CUTS_HPP

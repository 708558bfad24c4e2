#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bbc/crystal.hpp"
#include "bbc/graph.hpp"

namespace bbc {

// One broken clause of the defining conditions (i)-(vii), with a witness.
struct AxiomViolation {
  int clause = 0;  // 1..7
  Elem witness;
  int i = -1;
  long long l = 0;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every clause of the crystal definition on the explored window:
// weight shifts under e/f, phi = eps + <h_i, wt>, the e/f biconditional,
// the real and imaginary statistics steps, and the phi = -inf annihilation
// rule. Report-only; an empty report certifies the window.
AxiomReport check_axioms(const Crystal& S, const LabelledGraph& G);

// Partial element map; nullopt = undefined here (maps never send elements
// to 0 -- null propagation is handled by the checkers themselves).
using ElemMap = std::function<std::optional<Elem>(const Elem&)>;

struct MorphismReport {
  std::vector<std::string> undefined;      // map not defined on a node of A
  std::vector<std::string> wt_mismatch;
  std::vector<std::string> eps_mismatch;
  std::vector<std::string> phi_mismatch;
  std::vector<std::string> f_commute;
  std::vector<std::string> e_commute;
  std::vector<std::string> not_in_target;  // image misses the target window
  std::vector<std::string> injectivity;

  bool morphism_ok() const {
    return undefined.empty() && wt_mismatch.empty() && eps_mismatch.empty() && phi_mismatch.empty() &&
           f_commute.empty() && not_in_target.empty();
  }
  bool strict_ok() const { return morphism_ok() && e_commute.empty(); }
  bool injective() const { return injectivity.empty(); }
  bool embedding_ok() const { return strict_ok() && injective(); }
  std::vector<std::string> all_problems() const;
};

// Checks preservation of wt/eps/phi on the nodes of GA, commutation with
// every f and e in the window (null propagating to null), and injectivity.
// GB, when given, additionally pins the image inside the target window.
MorphismReport check_strict_morphism(const ElemMap& map, const Crystal& SA, const LabelledGraph& GA,
                                     const Crystal& SB, const LabelledGraph* GB);

struct NormalityWitness {
  Elem elem;
  int i = -1;
  std::string condition;  // "eps" or "phi"
  ExtInt value;
};

struct NormalityReport {
  bool normal = true;
  std::vector<NormalityWitness> witnesses;
};

// eps_i = 0 and phi_i >= 0 for every imaginary i on the supplied elements.
NormalityReport is_normal(const Crystal& S, const std::vector<Elem>& elems);
NormalityReport is_normal(const Crystal& S, const LabelledGraph& G);

// Nodes annihilated by every e(i,l) with l up to the graph budget.
std::vector<Elem> highest_weight_elements(const Crystal& S, const LabelledGraph& G);

std::map<Weight, long long> weight_multiplicities(const LabelledGraph& G);

// Label-synchronized traversal from the roots of two explored graphs.
// Builds the unique label-preserving node bijection when it exists and
// reports every obstruction otherwise (stat mismatch, edge present on one
// side only, collision, unreached nodes).
struct IsoReport {
  std::vector<std::string> problems;
  std::unordered_map<Elem, Elem, ElemHash> fwd;
  bool ok() const { return problems.empty(); }
};

IsoReport sync_isomorphism(const Crystal& SA, const LabelledGraph& GA, const Crystal& SB,
                           const LabelledGraph& GB);

}  // namespace bbc

#include <set>

#include "doctest.h"

#include "bbc/checks.hpp"
#include "bbc/elementary.hpp"
#include "bbc/highest_weight.hpp"
#include "bbc/sequence.hpp"
#include "bbc/tensor.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace bbc;

namespace {

// Breaks clause (iii) everywhere by shifting phi.
class PhiOffByOne final : public Crystal {
 public:
  explicit PhiOffByOne(CrystalPtr inner) : Crystal(inner->datum_ptr()), inner_(std::move(inner)) {}
  Weight wt(const Elem& b) const override { return inner_->wt(b); }
  ExtInt eps(int i, const Elem& b) const override { return inner_->eps(i, b); }
  ExtInt phi(int i, const Elem& b) const override { return inner_->phi(i, b) + 1; }
  std::optional<Elem> e(int i, long long l, const Elem& b) const override { return inner_->e(i, l, b); }
  std::optional<Elem> f(int i, long long l, const Elem& b) const override { return inner_->f(i, l, b); }
  std::string describe() const override { return "phi-off(" + inner_->describe() + ")"; }

 private:
  CrystalPtr inner_;
};

// Breaks the inverse property: f maps straight to the grandchild.
class DoubleLower final : public Crystal {
 public:
  explicit DoubleLower(CrystalPtr inner) : Crystal(inner->datum_ptr()), inner_(std::move(inner)) {}
  Weight wt(const Elem& b) const override { return inner_->wt(b); }
  ExtInt eps(int i, const Elem& b) const override { return inner_->eps(i, b); }
  ExtInt phi(int i, const Elem& b) const override { return inner_->phi(i, b); }
  std::optional<Elem> e(int i, long long l, const Elem& b) const override { return inner_->e(i, l, b); }
  std::optional<Elem> f(int i, long long l, const Elem& b) const override {
    auto once = inner_->f(i, l, b);
    if (!once) return once;
    auto twice = inner_->f(i, l, *once);
    return twice ? twice : once;
  }
  std::string describe() const override { return "double-f(" + inner_->describe() + ")"; }

 private:
  CrystalPtr inner_;
};

}  // namespace

TEST_CASE("zero budget explores a single node") {
  auto d = testdata::a2();
  auto S = sequence_crystal(d, testdata::natural_base(d));
  LabelledGraph G = explore(*S, {S->vacuum()}, 0);
  CHECK(G.nodes.size() == 1);
  CHECK(G.edges.empty());
  CHECK(G.roots.size() == 1);
}

TEST_CASE("explore is monotone in the budget") {
  auto d = testdata::mixed_ri();
  auto S = sequence_crystal(d, testdata::natural_base(d));
  for (long long h = 0; h < 4; ++h) {
    LabelledGraph Gh = explore(*S, {S->vacuum()}, h);
    LabelledGraph Gh1 = explore(*S, {S->vacuum()}, h + 1);
    for (const auto& n : Gh.nodes) CHECK(Gh1.contains(n.elem));
    // Induced equality: every edge of the larger graph between small-graph
    // nodes already appears in the smaller graph.
    std::set<std::tuple<std::size_t, std::size_t, int, long long>> small, induced;
    for (const auto& e : Gh.edges)
      small.insert({Gh.node(e.from).elem.hash(), Gh.node(e.to).elem.hash(), e.i, e.l});
    for (const auto& e : Gh1.edges) {
      const Elem& s = Gh1.node(e.from).elem;
      const Elem& t = Gh1.node(e.to).elem;
      if (Gh.contains(s) && Gh.contains(t)) induced.insert({s.hash(), t.hash(), e.i, e.l});
    }
    CHECK(small == induced);
  }
}

TEST_CASE("weight is path independent across every recorded edge") {
  auto d = testdata::rank3_mixed();
  auto S = sequence_crystal(d, testdata::natural_base(d));
  LabelledGraph G = explore(*S, {S->vacuum()}, 4);
  for (const auto& e : G.edges) {
    CHECK(G.node(e.from).wt - G.node(e.to).wt == Weight::alpha(e.i, e.l));
    CHECK(G.node(e.to).depth - G.node(e.from).depth == e.l);
  }
}

TEST_CASE("component closure walks upward through the window") {
  auto d = testdata::rank1_real();
  auto B = elementary(d, 0);
  // From (1) with budget 3 the window covers displacements -3..3, i.e. the
  // chain (0)..(4), and recovers the truncated chain through (0).
  LabelledGraph G = close_component(*B, Elem::real(0, 1), 3);
  CHECK(G.nodes.size() == 5);
  for (long long k = 0; k <= 4; ++k) CHECK(G.contains(Elem::real(0, k)));

  auto d2 = testdata::a2();
  auto BB = tensor(elementary(d2, 0), elementary(d2, 1));
  Elem seed = Elem::pair(Elem::real(0, 0), Elem::real(1, 0));
  LabelledGraph G0 = close_component(*BB, seed, 0);
  CHECK(G0.nodes.size() == 1);
}

TEST_CASE("axiom checker flags a shifted phi with a witness") {
  auto d = testdata::a2();
  auto B = elementary(d, 0);
  auto bad = std::make_shared<const PhiOffByOne>(B);
  LabelledGraph G = explore(*bad, {B->identity()}, 3);
  AxiomReport r = check_axioms(*bad, G);
  REQUIRE_FALSE(r.ok());
  bool clause3 = false;
  for (const auto& v : r.violations) clause3 |= (v.clause == 3 && v.witness.valid());
  CHECK(clause3);
}

TEST_CASE("axiom checker flags a broken inverse pair") {
  auto d = testdata::rank1_real();
  auto B = elementary(d, 0);
  auto bad = std::make_shared<const DoubleLower>(B);
  LabelledGraph G = explore(*B, {B->identity()}, 3);  // window from the honest structure
  AxiomReport r = check_axioms(*bad, G);
  REQUIRE_FALSE(r.ok());
  std::set<int> clauses;
  for (const auto& v : r.violations) clauses.insert(v.clause);
  CHECK(clauses.count(4) == 1);
}

TEST_CASE("identity map is a strict embedding") {
  auto d = testdata::mixed_ri();
  auto S = sequence_crystal(d, testdata::natural_base(d));
  LabelledGraph G = build_binfty(*S, 3);
  auto identity = [](const Elem& x) -> std::optional<Elem> { return x; };
  MorphismReport r = check_strict_morphism(identity, *S, G, *S, &G);
  CHECK(r.embedding_ok());
}

TEST_CASE("normality verdicts with witnesses") {
  auto d = testdata::rank3_mixed();  // indices: 0 real, 1 isotropic, 2 non-isotropic

  auto C = cutoff_crystal(d);
  CHECK(is_normal(*C, {C->token()}).normal);

  auto T = shift_crystal(d, Weight::fundamental(0));
  NormalityReport rt = is_normal(*T, {T->token()});
  REQUIRE_FALSE(rt.normal);
  CHECK(rt.witnesses.front().value == ExtInt::neg_inf());
  CHECK(rt.witnesses.front().condition == "eps");

  // B_i for imaginary i in a datum with a second imaginary index j:
  // eps_j = -inf on every element.
  auto B1 = elementary(d, 1);
  NormalityReport rb = is_normal(*B1, {B1->identity()});
  REQUIRE_FALSE(rb.normal);
  bool witness_other_imaginary = false;
  for (const auto& w : rb.witnesses)
    witness_other_imaginary |= (w.i == 2 && w.condition == "eps" && w.value == ExtInt::neg_inf());
  CHECK(witness_other_imaginary);
}

TEST_CASE("highest weight elements of explored windows") {
  auto d = testdata::mixed_ri();
  auto S = sequence_crystal(d, testdata::natural_base(d));
  LabelledGraph G = build_binfty(*S, 3);
  auto hw = highest_weight_elements(*S, G);
  REQUIRE(hw.size() == 1);
  CHECK(hw.front() == S->vacuum());

  auto di = testdata::rank1_iso();
  auto B = elementary(di, 0);
  LabelledGraph GF = explore(*B, {B->identity()}, 6);
  auto hwf = highest_weight_elements(*B, GF);
  REQUIRE(hwf.size() == 1);
  CHECK(hwf.front() == B->identity());
}

TEST_CASE("axioms hold on two-sided windows around interior seeds") {
  auto dn = testdata::rank1_noniso();
  auto B = elementary(dn, 0);
  LabelledGraph G = close_component(*B, Elem::comp(0, {2, 1}), 4);
  CHECK(check_axioms(*B, G).ok());
  CHECK(G.contains(Elem::comp(0, {})));  // reached the top

  auto dm = testdata::rank3_mixed();
  auto S = sequence_crystal(dm, testdata::natural_base(dm));
  Elem mid = *S->f(2, 2, *S->f(0, 1, S->vacuum()));
  LabelledGraph GM = close_component(*S, mid, 3);
  CHECK(check_axioms(*S, GM).ok());
  CHECK(GM.contains(S->vacuum()));
}

TEST_CASE("synchronized traversal detects genuinely different graphs") {
  auto d = testdata::rank1_real();
  BLambdaModel M1 = blambda_model(d, {0}, Weight::fundamental(0, 1));
  BLambdaModel M2 = blambda_model(d, {0}, Weight::fundamental(0, 3));
  LabelledGraph G1 = build_blambda(M1, 3);
  LabelledGraph G2 = build_blambda(M2, 3);
  REQUIRE(G1.nodes.size() != G2.nodes.size());
  IsoReport r = sync_isomorphism(*M1.structure, G1, *M2.structure, G2);
  CHECK_FALSE(r.ok());
}

TEST_CASE("strict morphism checker catches a collapsing map") {
  auto d = testdata::rank1_iso();
  auto S = sequence_crystal(d, {0});
  LabelledGraph G = build_binfty(*S, 3);
  Elem root = S->vacuum();
  auto collapse = [root](const Elem&) -> std::optional<Elem> { return root; };
  MorphismReport r = check_strict_morphism(collapse, *S, G, *S, &G);
  CHECK_FALSE(r.morphism_ok());
  CHECK_FALSE(r.injective());
  CHECK_FALSE(r.wt_mismatch.empty());
  CHECK_FALSE(r.f_commute.empty());
}

TEST_CASE("weight multiplicities of rank-1 vacuum components") {
  auto check_layer = [](const DatumPtr& d, long long depth, long long expected) {
    auto S = sequence_crystal(d, testdata::natural_base(d));
    LabelledGraph G = build_binfty(*S, depth);
    auto counts = weight_multiplicities(G);
    CHECK(counts[Weight::alpha(0, -depth)] == expected);
  };
  check_layer(testdata::rank1_iso(), 3, 3);     // partitions of 3
  check_layer(testdata::rank1_noniso(), 3, 4);  // compositions of 3
  check_layer(testdata::rank1_real(), 3, 1);
}

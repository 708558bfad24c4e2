#include <random>

#include "doctest.h"

#include "bbc/checks.hpp"
#include "bbc/elementary.hpp"
#include "bbc/sequence.hpp"
#include "bbc/tensor.hpp"
#include "test_data.hpp"

using namespace bbc;

TEST_CASE("tensor statistics") {
  auto d = testdata::rank1_real();
  auto B = elementary(d, 0);
  auto BB = tensor(B, B);
  Elem x = Elem::pair(Elem::real(0, 1), Elem::real(0, 0));
  CHECK(BB->wt(x) == Weight::alpha(0, -1));
  // max(eps(b1), eps(b2) - <h, wt(b1)>) = max(1, 0 + 2) = 2
  CHECK(BB->eps(0, x) == ExtInt(2));
  CHECK(BB->phi(0, x) == ExtInt(BB->eps(0, x).value() + d->pairing(0, BB->wt(x))));

  auto T = shift_crystal(d, Weight::fundamental(0, 3));
  auto BT = tensor(B, T);
  Elem y = Elem::pair(Elem::real(0, 1), T->token());
  CHECK(BT->eps(0, y) == ExtInt(1));  // second term is -inf

  auto TB = tensor(T, B);
  Elem z = Elem::pair(T->token(), Elem::real(0, 1));
  CHECK(TB->phi(0, z) == ExtInt(-1));  // first term is -inf
}

TEST_CASE("tensor lowering routes by the phi/eps threshold") {
  auto d = testdata::rank1_real();
  auto B = elementary(d, 0);
  auto BB = tensor(B, B);
  // phi(b1) = -1 < 0 = eps(b2): act right.
  Elem x = Elem::pair(Elem::real(0, 1), Elem::real(0, 0));
  CHECK(*BB->f(0, 1, x) == Elem::pair(Elem::real(0, 1), Elem::real(0, 1)));

  auto dn = testdata::rank1_noniso();
  auto Bn = elementary(dn, 0);
  auto C = cutoff_crystal(dn);
  auto BC = tensor(Bn, C);
  // phi(b1) = 2 > 0 = eps(c): act left.
  Elem y = Elem::pair(Elem::comp(0, {1}), C->token());
  CHECK(*BC->f(0, 1, y) == Elem::pair(Elem::comp(0, {1, 1}), C->token()));
  // phi(b1) = 0 = eps(c): act right, and c is annihilated -- the cutoff.
  Elem top = Elem::pair(Elem::comp(0, {}), C->token());
  CHECK_FALSE(BC->f(0, 1, top).has_value());
}

TEST_CASE("imaginary raising has the three-way case split") {
  auto dn = testdata::rank1_noniso();  // a_ii = -2
  auto Bn = elementary(dn, 0);
  auto BB = tensor(Bn, Bn);
  Elem b2 = Elem::comp(0, {1});  // eps = 0

  // phi(b1) = 4 > eps(b2) - l a_ii = 2: act left.
  Elem left_case = Elem::pair(Elem::comp(0, {1, 1}), b2);
  CHECK(*BB->e(0, 1, left_case) == Elem::pair(Elem::comp(0, {1}), b2));

  // 0 < phi(b1) = 2 <= 2: the dead band.
  Elem dead_case = Elem::pair(Elem::comp(0, {1}), b2);
  CHECK_FALSE(BB->e(0, 1, dead_case).has_value());

  // phi(b1) = 0 <= eps(b2): act right.
  Elem right_case = Elem::pair(Elem::comp(0, {}), b2);
  CHECK(*BB->e(0, 1, right_case) == Elem::pair(Elem::comp(0, {}), Elem::comp(0, {})));

  // Isotropic indices have no dead band: the split degenerates.
  auto di = testdata::rank1_iso();
  auto Bi = elementary(di, 0);
  auto T = shift_crystal(di, Weight::fundamental(0, 2));
  auto X = tensor(tensor(Bi, T), Bi);
  // phi(part (x) t) = 0 + 2 > 0: act left; inner routing removes the part.
  Elem w = Elem::pair(Elem::pair(Elem::part(0, {1}), T->token()), Elem::part(0, {}));
  CHECK(*X->e(0, 1, w) == Elem::pair(Elem::pair(Elem::part(0, {}), T->token()), Elem::part(0, {})));
  // phi <= eps: act right (and die there).
  auto BiBi = tensor(Bi, Bi);
  Elem v = Elem::pair(Elem::part(0, {}), Elem::part(0, {}));
  CHECK_FALSE(BiBi->e(0, 1, v).has_value());
  CHECK(*BiBi->e(0, 1, Elem::pair(Elem::part(0, {}), Elem::part(0, {1}))) == v);
}

TEST_CASE("tensors of explored structures satisfy the axioms") {
  std::vector<DatumPtr> data = {testdata::rank1_iso(), testdata::mixed_ri(), testdata::rank3_mixed()};
  for (const auto& d : data) {
    std::vector<std::pair<CrystalPtr, Elem>> factors;
    for (int i = 0; i < d->rank(); ++i) {
      auto B = elementary(d, i);
      factors.emplace_back(B, B->identity());
    }
    auto T = shift_crystal(d, Weight::fundamental(0));
    factors.emplace_back(T, T->token());
    auto C = cutoff_crystal(d);
    factors.emplace_back(C, C->token());

    for (const auto& [SA, sa] : factors)
      for (const auto& [SB, sb] : factors) {
        auto S = tensor(SA, SB);
        LabelledGraph G = explore(*S, {Elem::pair(sa, sb)}, 3);
        AxiomReport r = check_axioms(*S, G);
        CAPTURE(S->describe());
        CHECK(r.ok());
      }
  }
}

TEST_CASE("normality passes to tensor products") {
  auto d = testdata::rank3_mixed();
  auto base = testdata::natural_base(d);
  auto S1 = sequence_crystal(d, base);
  auto S2 = sequence_crystal(d, base);
  auto S = tensor(S1, S2);
  LabelledGraph G1 = build_binfty(*S1, 3);
  CHECK(is_normal(*S1, G1).normal);
  LabelledGraph G = explore(*S, {Elem::pair(S1->vacuum(), S2->vacuum())}, 3);
  CHECK(is_normal(*S, G).normal);

  // A non-normal factor loses the property.
  auto B1 = elementary(d, 1);
  auto TB = tensor(shift_crystal(d, Weight()), B1);
  CHECK_FALSE(is_normal(*TB, {Elem::pair(Elem::t_token(Weight()), B1->identity())}).normal);
}

TEST_CASE("inverse property across the tensor rules") {
  auto d = testdata::rank3_mixed();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(0, d->rank() - 1);
  std::uniform_int_distribution<long long> lp(1, 3);

  auto S1 = sequence_crystal(d, testdata::natural_base(d));
  auto B2 = elementary(d, 2);
  auto S = tensor(S1, B2);
  LabelledGraph G = explore(*S, {Elem::pair(S1->vacuum(), B2->identity())}, 4);
  int checked = 0;
  for (const auto& node : G.nodes) {
    for (int t = 0; t < 4; ++t) {
      int i = idx(rng);
      long long l = d->real(i) ? 1 : lp(rng);
      if (auto lowered = S->f(i, l, node.elem)) {
        CHECK(*S->e(i, l, *lowered) == node.elem);
        ++checked;
      }
      if (auto raised = S->e(i, l, node.elem)) {
        CHECK(*S->f(i, l, *raised) == node.elem);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("associativity isomorphism on elementary triples") {
  auto d = testdata::a2();
  auto B0 = elementary(d, 0);
  auto B1 = elementary(d, 1);
  AssocReport r1 = assoc_isomorphism(B0, B1, B0, B0->identity(), B1->identity(), B0->identity(), 3);
  CHECK(r1.ok());

  auto T = shift_crystal(d, Weight::fundamental(0));
  AssocReport r2 = assoc_isomorphism(B0, T, B1, B0->identity(), T->token(), B1->identity(), 2);
  CHECK(r2.ok());

  auto C = cutoff_crystal(d);
  AssocReport r3 = assoc_isomorphism(B0, B1, C, B0->identity(), B1->identity(), C->token(), 3);
  CHECK(r3.ok());

  AssocReport r0 = assoc_isomorphism(B0, B1, B1, B0->identity(), B1->identity(), B1->identity(), 0);
  CHECK(r0.ok());

  auto dm = testdata::rank3_mixed();
  auto M0 = elementary(dm, 0);
  auto M1 = elementary(dm, 1);
  auto M2 = elementary(dm, 2);
  AssocReport r4 = assoc_isomorphism(M1, M2, M0, M1->identity(), M2->identity(), M0->identity(), 3);
  CHECK(r4.ok());
}

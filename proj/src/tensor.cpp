#include "bbc/tensor.hpp"

#include <cassert>

#include "bbc/checks.hpp"

namespace bbc {

TensorCrystal::TensorCrystal(CrystalPtr left, CrystalPtr right)
    : Crystal(left->datum_ptr()), left_(std::move(left)), right_(std::move(right)) {
  if (left_->datum_ptr() != right_->datum_ptr())
    throw BbcError("tensor factors must share one Cartan datum instance");
}

Weight TensorCrystal::wt(const Elem& b) const {
  assert(b.kind() == Elem::Kind::Pair);
  return left_->wt(b.left()) + right_->wt(b.right());
}

ExtInt TensorCrystal::eps(int i, const Elem& b) const {
  assert(b.kind() == Elem::Kind::Pair);
  ExtInt e1 = left_->eps(i, b.left());
  ExtInt e2 = right_->eps(i, b.right());
  return ExtInt::max(e1, e2 - datum().pairing(i, left_->wt(b.left())));
}

ExtInt TensorCrystal::phi(int i, const Elem& b) const {
  assert(b.kind() == Elem::Kind::Pair);
  ExtInt p1 = left_->phi(i, b.left());
  ExtInt p2 = right_->phi(i, b.right());
  return ExtInt::max(p1 + datum().pairing(i, right_->wt(b.right())), p2);
}

std::optional<Elem> TensorCrystal::f(int i, long long l, const Elem& b) const {
  require_op(i, l);
  assert(b.kind() == Elem::Kind::Pair);
  ExtInt p1 = left_->phi(i, b.left());
  ExtInt e2 = right_->eps(i, b.right());
  if (!p1.finite() && !right_->phi(i, b.right()).finite()) return std::nullopt;  // phi = -inf
  // Same threshold for real and imaginary i.
  if (p1 > e2) {
    auto fa = left_->f(i, l, b.left());
    if (!fa) return std::nullopt;
    return Elem::pair(*fa, b.right());
  }
  auto fb = right_->f(i, l, b.right());
  if (!fb) return std::nullopt;
  return Elem::pair(b.left(), *fb);
}

std::optional<Elem> TensorCrystal::e(int i, long long l, const Elem& b) const {
  require_op(i, l);
  assert(b.kind() == Elem::Kind::Pair);
  ExtInt p1 = left_->phi(i, b.left());
  ExtInt e2 = right_->eps(i, b.right());
  if (!p1.finite() && !right_->phi(i, b.right()).finite()) return std::nullopt;
  bool act_left;
  if (datum().real(i)) {
    act_left = p1 >= e2;
  } else {
    long long aii = datum().a(i, i);
    if (p1 > e2 - l * aii) {
      act_left = true;
    } else if (p1 <= e2) {
      act_left = false;
    } else {
      // eps(b2) < phi(b1) <= eps(b2) - l*a_ii; empty band when a_ii = 0.
      return std::nullopt;
    }
  }
  if (act_left) {
    auto ea = left_->e(i, l, b.left());
    if (!ea) return std::nullopt;
    return Elem::pair(*ea, b.right());
  }
  auto eb = right_->e(i, l, b.right());
  if (!eb) return std::nullopt;
  return Elem::pair(b.left(), *eb);
}

std::string TensorCrystal::describe() const { return left_->describe() + " (x) " + right_->describe(); }

std::shared_ptr<const TensorCrystal> tensor(CrystalPtr left, CrystalPtr right) {
  return std::make_shared<const TensorCrystal>(std::move(left), std::move(right));
}

AssocReport assoc_isomorphism(CrystalPtr A, CrystalPtr B, CrystalPtr C, const Elem& a, const Elem& b,
                              const Elem& c, long long budget) {
  AssocReport report;
  auto lhs = tensor(tensor(A, B), C);
  auto rhs = tensor(A, tensor(B, C));
  Elem seed_l = Elem::pair(Elem::pair(a, b), c);
  Elem seed_r = Elem::pair(a, Elem::pair(b, c));
  LabelledGraph GL = close_component(*lhs, seed_l, budget);
  LabelledGraph GR = close_component(*rhs, seed_r, budget);

  if (GL.nodes.size() != GR.nodes.size())
    report.problems.push_back("component sizes differ: " + std::to_string(GL.nodes.size()) + " vs " +
                              std::to_string(GR.nodes.size()));

  auto rebracket = [](const Elem& x) -> std::optional<Elem> {
    return Elem::pair(x.left().left(), Elem::pair(x.left().right(), x.right()));
  };
  MorphismReport mr = check_strict_morphism(rebracket, *lhs, GL, *rhs, &GR);
  if (!mr.embedding_ok())
    for (const auto& p : mr.all_problems()) report.problems.push_back(p);
  return report;
}

}  // namespace bbc

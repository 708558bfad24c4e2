#pragma once

#include "bbc/crystal.hpp"
#include "bbc/graph.hpp"

namespace bbc {

// Tensor product of two crystals over the same datum. Generic over any two
// factor structures, so towers like B(inf) (x) T_lambda (x) C compose with
// no special code. Elements are Elem::pair(left, right).
class TensorCrystal final : public Crystal {
 public:
  TensorCrystal(CrystalPtr left, CrystalPtr right);

  const Crystal& left() const { return *left_; }
  const Crystal& right() const { return *right_; }

  Weight wt(const Elem& b) const override;
  ExtInt eps(int i, const Elem& b) const override;
  ExtInt phi(int i, const Elem& b) const override;
  std::optional<Elem> e(int i, long long l, const Elem& b) const override;
  std::optional<Elem> f(int i, long long l, const Elem& b) const override;
  std::string describe() const override;

 private:
  CrystalPtr left_, right_;
};

std::shared_ptr<const TensorCrystal> tensor(CrystalPtr left, CrystalPtr right);

// Verifies the re-bracketing map (b1 (x) b2) (x) b3 -> b1 (x) (b2 (x) b3)
// between the explored components of the two bracketings: a bijection on
// nodes preserving wt/eps/phi and commuting with every e and f inside the
// window.
struct AssocReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

AssocReport assoc_isomorphism(CrystalPtr A, CrystalPtr B, CrystalPtr C, const Elem& a, const Elem& b,
                              const Elem& c, long long budget);

}  // namespace bbc

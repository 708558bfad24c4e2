#pragma once

#include <memory>
#include <optional>
#include <string>

#include "bbc/cartan.hpp"
#include "bbc/elem.hpp"
#include "bbc/extint.hpp"

namespace bbc {

// Abstract crystal interface: a carrier of elements with weight and string
// statistics plus the partial raising/lowering operators e(i,l) / f(i,l),
// where l = 1 is forced for real i. Implementations are pure: no observable
// state is mutated by any of the five maps, so structures can be shared
// freely across threads.
class Crystal {
 public:
  explicit Crystal(DatumPtr datum) : datum_(std::move(datum)) {}
  virtual ~Crystal() = default;

  const CartanDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }

  virtual Weight wt(const Elem& b) const = 0;
  virtual ExtInt eps(int i, const Elem& b) const = 0;
  virtual ExtInt phi(int i, const Elem& b) const = 0;
  // Raising operator; nullopt encodes the paper's 0.
  virtual std::optional<Elem> e(int i, long long l, const Elem& b) const = 0;
  // Lowering operator.
  virtual std::optional<Elem> f(int i, long long l, const Elem& b) const = 0;
  virtual std::string describe() const = 0;

 protected:
  // (i,l) must lie in I^infinity.
  void require_op(int i, long long l) const {
    if (l < 1) throw BadOperatorError("operator label l must be >= 1, got " + std::to_string(l));
    if (datum().real(i) && l != 1)
      throw BadOperatorError("real index " + datum().name(i) + " only admits l = 1, got " + std::to_string(l));
  }

 private:
  DatumPtr datum_;
};

using CrystalPtr = std::shared_ptr<const Crystal>;

}  // namespace bbc

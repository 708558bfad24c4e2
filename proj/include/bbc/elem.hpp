#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bbc/cartan.hpp"

namespace bbc {

// Immutable crystal element. One value type covers every carrier in the
// library: elementary elements (real counters, compositions, partitions),
// the weight-shift and cutoff tokens, finitely supported sequences, and
// tensor pairs. Structural equality and hashing; copies are cheap handles.
class Elem {
 public:
  enum class Kind { Real, Comp, Part, TToken, CToken, Seq, Pair };

  Elem() = default;

  static Elem real(int home, long long n);
  // Composition: literal part order is significant, head first.
  static Elem comp(int home, std::vector<long long> parts);
  // Partition: canonicalized weakly increasing.
  static Elem part(int home, std::vector<long long> parts);
  static Elem t_token(Weight lambda);
  static Elem c_token();
  // entries[k-1] is the component at position k; trailing trivial entries
  // are trimmed so the stored form is canonical.
  static Elem seq(std::vector<Elem> entries);
  static Elem pair(Elem left, Elem right);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;

  int home() const;                            // Real/Comp/Part
  long long real_value() const;                // Real
  const std::vector<long long>& parts() const; // Comp/Part
  // |c| for compositions/partitions, the counter for real entries.
  long long total() const;
  // True for (0), the empty composition and the empty partition.
  bool trivial() const;

  const Weight& t_weight() const;              // TToken
  const std::vector<Elem>& entries() const;    // Seq
  const Elem& left() const;                    // Pair
  const Elem& right() const;                   // Pair

  std::size_t hash() const;
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  std::string repr(const CartanDatum& d) const;

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return e.hash(); }
};

// The identity element of B_i: (0) for real i, the empty composition or
// partition for imaginary i.
Elem trivial_elem(const CartanDatum& d, int i);

}  // namespace bbc

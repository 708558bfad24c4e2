#include "bbc/elem.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace bbc {

namespace {

void hash_mix(std::size_t& h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

std::size_t weight_hash(const Weight& w) {
  std::size_t h = 0x5157;
  for (const auto& [i, c] : w.lam_terms()) {
    hash_mix(h, std::hash<int>{}(i));
    hash_mix(h, std::hash<long long>{}(c));
  }
  hash_mix(h, 0xabcd);
  for (const auto& [i, c] : w.rt_terms()) {
    hash_mix(h, std::hash<int>{}(i));
    hash_mix(h, std::hash<long long>{}(c));
  }
  return h;
}

std::string parts_repr(const std::vector<long long>& parts) {
  if (parts.empty()) return "(0)";
  std::string s = "(";
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts[k]);
  }
  return s + ")";
}

}  // namespace

struct Elem::Node {
  Kind kind;
  int home = -1;
  long long value = 0;
  std::vector<long long> parts;
  Weight lambda;
  std::vector<Elem> entries;
  Elem lhs, rhs;
  std::size_t hash = 0;

  std::size_t compute_hash() const {
    std::size_t h = std::hash<int>{}(static_cast<int>(kind) * 977);
    switch (kind) {
      case Kind::Real:
        hash_mix(h, std::hash<int>{}(home));
        hash_mix(h, std::hash<long long>{}(value));
        break;
      case Kind::Comp:
      case Kind::Part:
        hash_mix(h, std::hash<int>{}(home));
        for (long long p : parts) hash_mix(h, std::hash<long long>{}(p));
        break;
      case Kind::TToken:
        hash_mix(h, weight_hash(lambda));
        break;
      case Kind::CToken:
        hash_mix(h, 0xc0c0);
        break;
      case Kind::Seq:
        for (const Elem& e : entries) hash_mix(h, e.hash());
        break;
      case Kind::Pair:
        hash_mix(h, lhs.hash());
        hash_mix(h, rhs.hash());
        break;
    }
    return h;
  }
};

Elem Elem::real(int home, long long n) {
  assert(n >= 0);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Real;
  node->home = home;
  node->value = n;
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::comp(int home, std::vector<long long> parts) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Comp;
  node->home = home;
  node->parts = std::move(parts);
  for ([[maybe_unused]] long long p : node->parts) assert(p >= 1);
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::part(int home, std::vector<long long> parts) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Part;
  node->home = home;
  node->parts = std::move(parts);
  for ([[maybe_unused]] long long p : node->parts) assert(p >= 1);
  std::sort(node->parts.begin(), node->parts.end());
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::t_token(Weight lambda) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::TToken;
  node->lambda = std::move(lambda);
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::c_token() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::CToken;
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::seq(std::vector<Elem> entries) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Seq;
  node->entries = std::move(entries);
  while (!node->entries.empty() && node->entries.back().trivial()) node->entries.pop_back();
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem Elem::pair(Elem left, Elem right) {
  assert(left.valid() && right.valid());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->lhs = std::move(left);
  node->rhs = std::move(right);
  node->hash = node->compute_hash();
  return Elem(std::move(node));
}

Elem::Kind Elem::kind() const {
  assert(node_);
  return node_->kind;
}

int Elem::home() const {
  assert(node_ && (node_->kind == Kind::Real || node_->kind == Kind::Comp || node_->kind == Kind::Part));
  return node_->home;
}

long long Elem::real_value() const {
  assert(node_ && node_->kind == Kind::Real);
  return node_->value;
}

const std::vector<long long>& Elem::parts() const {
  assert(node_ && (node_->kind == Kind::Comp || node_->kind == Kind::Part));
  return node_->parts;
}

long long Elem::total() const {
  assert(node_);
  if (node_->kind == Kind::Real) return node_->value;
  assert(node_->kind == Kind::Comp || node_->kind == Kind::Part);
  long long s = 0;
  for (long long p : node_->parts) s += p;
  return s;
}

bool Elem::trivial() const {
  assert(node_);
  switch (node_->kind) {
    case Kind::Real:
      return node_->value == 0;
    case Kind::Comp:
    case Kind::Part:
      return node_->parts.empty();
    default:
      return false;
  }
}

const Weight& Elem::t_weight() const {
  assert(node_ && node_->kind == Kind::TToken);
  return node_->lambda;
}

const std::vector<Elem>& Elem::entries() const {
  assert(node_ && node_->kind == Kind::Seq);
  return node_->entries;
}

const Elem& Elem::left() const {
  assert(node_ && node_->kind == Kind::Pair);
  return node_->lhs;
}

const Elem& Elem::right() const {
  assert(node_ && node_->kind == Kind::Pair);
  return node_->rhs;
}

std::size_t Elem::hash() const { return node_ ? node_->hash : 0; }

bool operator==(const Elem& a, const Elem& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  switch (x.kind) {
    case Elem::Kind::Real:
      return x.home == y.home && x.value == y.value;
    case Elem::Kind::Comp:
    case Elem::Kind::Part:
      return x.home == y.home && x.parts == y.parts;
    case Elem::Kind::TToken:
      return x.lambda == y.lambda;
    case Elem::Kind::CToken:
      return true;
    case Elem::Kind::Seq:
      return x.entries == y.entries;
    case Elem::Kind::Pair:
      return x.lhs == y.lhs && x.rhs == y.rhs;
  }
  return false;
}

std::string Elem::repr(const CartanDatum& d) const {
  if (!node_) return "<none>";
  switch (node_->kind) {
    case Kind::Real:
      return "(" + std::to_string(node_->value) + ")";
    case Kind::Comp:
    case Kind::Part:
      return parts_repr(node_->parts);
    case Kind::TToken:
      return "t[" + node_->lambda.repr(d) + "]";
    case Kind::CToken:
      return "c";
    case Kind::Seq: {
      if (node_->entries.empty()) return "(0)";
      std::string s = "⋯";  // stands for the vacuum tail
      for (auto it = node_->entries.rbegin(); it != node_->entries.rend(); ++it)
        s += "⊗" + it->repr(d);
      return s;
    }
    case Kind::Pair:
      return node_->lhs.repr(d) + " ⊗ " + node_->rhs.repr(d);
  }
  return "<?>";
}

Elem trivial_elem(const CartanDatum& d, int i) {
  switch (d.classify(i)) {
    case IndexClass::Real:
      return Elem::real(i, 0);
    case IndexClass::Isotropic:
      return Elem::part(i, {});
    case IndexClass::ImaginaryNonIsotropic:
      return Elem::comp(i, {});
  }
  throw BbcError("unreachable");
}

}  // namespace bbc

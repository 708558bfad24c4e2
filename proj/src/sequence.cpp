#include "bbc/sequence.hpp"

#include <algorithm>
#include <cassert>

#include "bbc/elementary.hpp"
#include "bbc/tensor.hpp"

namespace bbc {

IndexSequence::IndexSequence(const CartanDatum& d, std::vector<int> base) : base_(std::move(base)) {
  if (base_.empty()) throw BbcError("index sequence base must be nonempty");
  for (int i : base_) d.classify(i);
  for (int i = 0; i < d.rank(); ++i)
    if (std::find(base_.begin(), base_.end(), i) == base_.end())
      throw BbcError("index " + d.name(i) + " does not occur in the sequence base");
}

int IndexSequence::at(long long k) const {
  assert(k >= 1);
  return base_[static_cast<size_t>((k - 1) % static_cast<long long>(base_.size()))];
}

IndexSequence IndexSequence::rotated_to(const CartanDatum& d, int i) const {
  auto it = std::find(base_.begin(), base_.end(), i);
  if (it == base_.end()) throw UnknownIndexError("index not in sequence base");
  std::vector<int> rotated(it, base_.end());
  rotated.insert(rotated.end(), base_.begin(), it);
  return IndexSequence(d, std::move(rotated));
}

IndexSequence IndexSequence::shifted(const CartanDatum& d) const {
  std::vector<int> rotated(base_.begin() + 1, base_.end());
  rotated.push_back(base_.front());
  return IndexSequence(d, std::move(rotated));
}

SeqCrystal::SeqCrystal(DatumPtr datum, IndexSequence seq) : Crystal(std::move(datum)), seq_(std::move(seq)) {}

namespace {

long long entry_total(const std::vector<Elem>& entries, long long k) {
  if (k < 1 || k > static_cast<long long>(entries.size())) return 0;
  return entries[static_cast<size_t>(k - 1)].total();
}

std::vector<Elem> trim_trailing(std::vector<Elem> entries) {
  while (!entries.empty() && entries.back().trivial()) entries.pop_back();
  return entries;
}

}  // namespace

Elem SeqCrystal::entry_at(long long k, const std::vector<Elem>& entries) const {
  if (k >= 1 && k <= static_cast<long long>(entries.size())) return entries[static_cast<size_t>(k - 1)];
  return trivial_elem(datum(), seq_.at(k));
}

long long SeqCrystal::first_beyond(long long n, int i) const {
  for (long long k = n + 1;; ++k)
    if (seq_.at(k) == i) return k;
}

Elem SeqCrystal::make(const std::vector<std::pair<long long, Elem>>& support) const {
  long long max_pos = 0;
  for (const auto& [k, entry] : support) {
    if (k < 1) throw BbcError("sequence positions start at 1");
    max_pos = std::max(max_pos, k);
  }
  std::vector<Elem> entries;
  entries.reserve(static_cast<size_t>(max_pos));
  for (long long k = 1; k <= max_pos; ++k) entries.push_back(trivial_elem(datum(), seq_.at(k)));
  for (const auto& [k, entry] : support) {
    int i = seq_.at(k);
    Elem expected = trivial_elem(datum(), i);
    if (entry.kind() != expected.kind() || entry.home() != i)
      throw BbcError("entry at position " + std::to_string(k) + " does not belong to B_" + datum().name(i));
    entries[static_cast<size_t>(k - 1)] = entry;
  }
  return Elem::seq(std::move(entries));
}

Weight SeqCrystal::wt(const Elem& b) const {
  assert(b.kind() == Elem::Kind::Seq);
  Weight w;
  const auto& entries = b.entries();
  for (long long k = 1; k <= static_cast<long long>(entries.size()); ++k)
    w = w.plus_alpha(seq_.at(k), -entry_total(entries, k));
  return w;
}

ExtInt SeqCrystal::eps(int i, const Elem& b) const {
  assert(b.kind() == Elem::Kind::Seq);
  datum().classify(i);
  if (datum().imaginary(i)) return 0;
  const auto& entries = b.entries();
  const long long n = static_cast<long long>(entries.size());
  // value(k) = c_k + sum_{p>k} c_p a_{i,i_p}; positions beyond the support
  // all contribute 0, so the running maximum starts at 0.
  long long best = 0;
  long long tail = 0;
  for (long long k = n; k >= 1; --k) {
    if (seq_.at(k) == i) best = std::max(best, entry_total(entries, k) + tail);
    tail += entry_total(entries, k) * datum().a(i, seq_.at(k));
  }
  return best;
}

ExtInt SeqCrystal::phi(int i, const Elem& b) const {
  assert(b.kind() == Elem::Kind::Seq);
  datum().classify(i);
  const auto& entries = b.entries();
  const long long n = static_cast<long long>(entries.size());
  if (datum().imaginary(i)) {
    long long s = 0;
    for (long long k = 1; k <= n; ++k) s -= entry_total(entries, k) * datum().a(i, seq_.at(k));
    return s;
  }
  // value(k) = -c_k - sum_{p<k} c_p a_{i,i_p}; the virtual position beyond
  // the support contributes <h_i, wt(b)>.
  long long head = 0;
  long long best = 0;
  bool have = false;
  for (long long k = 1; k <= n; ++k) {
    if (seq_.at(k) == i) {
      long long v = -entry_total(entries, k) - head;
      if (!have || v > best) best = v, have = true;
    }
    head += entry_total(entries, k) * datum().a(i, seq_.at(k));
  }
  long long beyond = -head;  // = <h_i, wt(b)>
  if (!have || beyond > best) best = beyond;
  return best;
}

std::optional<Elem> SeqCrystal::f(int i, long long l, const Elem& b) const {
  require_op(i, l);
  assert(b.kind() == Elem::Kind::Seq);
  const auto& entries = b.entries();
  const long long n = static_cast<long long>(entries.size());

  if (datum().real(i)) {
    // t = smallest position attaining eps_i(b).
    const long long target = eps(i, b).value();
    const long long stop = first_beyond(n, i);
    std::vector<long long> tails(static_cast<size_t>(n) + 2, 0);
    for (long long k = n; k >= 1; --k)
      tails[static_cast<size_t>(k)] = tails[static_cast<size_t>(k + 1)] + entry_total(entries, k) * datum().a(i, seq_.at(k));
    long long t = 0;
    for (long long k = 1; k <= stop; ++k) {
      if (seq_.at(k) != i) continue;
      long long tail = k <= n ? tails[static_cast<size_t>(k + 1)] : 0;
      long long v = entry_total(entries, k) + tail;
      if (v == target) {
        t = k;
        break;
      }
    }
    assert(t >= 1);
    std::vector<Elem> out = entries;
    for (long long k = n + 1; k <= t; ++k) out.push_back(trivial_elem(datum(), seq_.at(k)));
    out[static_cast<size_t>(t - 1)] = Elem::real(i, entry_total(entries, t) + 1);
    return Elem::seq(std::move(out));
  }

  long long r = select_insert_position(i, entries);
  std::vector<Elem> out = entries;
  for (long long k = n + 1; k <= r; ++k) out.push_back(trivial_elem(datum(), seq_.at(k)));
  Elem cur = out[static_cast<size_t>(r - 1)];
  if (datum().isotropic(i)) {
    auto parts = cur.parts();
    parts.push_back(l);
    out[static_cast<size_t>(r - 1)] = Elem::part(i, std::move(parts));
  } else {
    std::vector<long long> parts;
    parts.reserve(cur.parts().size() + 1);
    parts.push_back(l);
    parts.insert(parts.end(), cur.parts().begin(), cur.parts().end());
    out[static_cast<size_t>(r - 1)] = Elem::comp(i, std::move(parts));
  }
  return Elem::seq(std::move(out));
}

std::optional<Elem> SeqCrystal::e(int i, long long l, const Elem& b) const {
  require_op(i, l);
  assert(b.kind() == Elem::Kind::Seq);
  const auto& entries = b.entries();
  const long long n = static_cast<long long>(entries.size());

  if (datum().real(i)) {
    const long long target = eps(i, b).value();
    if (target <= 0) return std::nullopt;
    // s = largest position attaining eps_i(b); it lies inside the support.
    std::vector<long long> tails(static_cast<size_t>(n) + 2, 0);
    for (long long k = n; k >= 1; --k)
      tails[static_cast<size_t>(k)] = tails[static_cast<size_t>(k + 1)] + entry_total(entries, k) * datum().a(i, seq_.at(k));
    long long s = 0;
    for (long long k = n; k >= 1; --k) {
      if (seq_.at(k) != i) continue;
      if (entry_total(entries, k) + tails[static_cast<size_t>(k + 1)] == target) {
        s = k;
        break;
      }
    }
    assert(s >= 1);
    // (l) = 0 for l < 0: a zero counter at the selected position annihilates.
    if (entry_total(entries, s) == 0) return std::nullopt;
    std::vector<Elem> out = entries;
    out[static_cast<size_t>(s - 1)] = Elem::real(i, entry_total(entries, s) - 1);
    return Elem::seq(trim_trailing(std::move(out)));
  }

  long long r = select_insert_position(i, entries);
  if (r > n) return std::nullopt;
  const Elem& cur = entries[static_cast<size_t>(r - 1)];
  if (datum().isotropic(i)) {
    if (std::find(cur.parts().begin(), cur.parts().end(), l) == cur.parts().end()) return std::nullopt;
  } else {
    if (cur.parts().empty() || cur.parts().front() != l) return std::nullopt;
  }
  // For every s < r with i_s = i: sum_{s<p<=r} c_p a_{i,i_p} < l a_ii.
  const long long laii = l * datum().a(i, i);
  std::vector<long long> prefix(static_cast<size_t>(n) + 1, 0);
  for (long long k = 1; k <= n; ++k)
    prefix[static_cast<size_t>(k)] =
        prefix[static_cast<size_t>(k - 1)] + entry_total(entries, k) * datum().a(i, seq_.at(k));
  for (long long s = 1; s < r; ++s) {
    if (seq_.at(s) != i) continue;
    long long between = prefix[static_cast<size_t>(r)] - prefix[static_cast<size_t>(s)];
    if (!(between < laii)) return std::nullopt;
  }
  std::vector<Elem> out = entries;
  if (datum().isotropic(i)) {
    auto parts = cur.parts();
    parts.erase(std::find(parts.begin(), parts.end(), l));
    out[static_cast<size_t>(r - 1)] = Elem::part(i, std::move(parts));
  } else {
    out[static_cast<size_t>(r - 1)] = Elem::comp(i, {cur.parts().begin() + 1, cur.parts().end()});
  }
  return Elem::seq(trim_trailing(std::move(out)));
}

long long SeqCrystal::select_insert_position(int i, const std::vector<Elem>& entries) const {
  const long long n = static_cast<long long>(entries.size());
  const long long stop = first_beyond(n, i);
  std::vector<long long> tails(static_cast<size_t>(n) + 2, 0);
  for (long long k = n; k >= 1; --k)
    tails[static_cast<size_t>(k)] = tails[static_cast<size_t>(k + 1)] + entry_total(entries, k) * datum().a(i, seq_.at(k));
  for (long long k = 1; k <= stop; ++k) {
    if (seq_.at(k) != i) continue;
    long long tail = k <= n ? tails[static_cast<size_t>(k + 1)] : 0;
    if (tail == 0) return k;
  }
  return stop;  // the position beyond the support always qualifies
}

std::string SeqCrystal::describe() const {
  std::string s = "B_seq(";
  for (size_t j = 0; j < seq_.base().size(); ++j) {
    if (j) s += ",";
    s += datum().name(seq_.base()[j]);
  }
  return s + ")";
}

std::shared_ptr<const SeqCrystal> sequence_crystal(DatumPtr datum, std::vector<int> base) {
  IndexSequence seq(*datum, std::move(base));
  return std::make_shared<const SeqCrystal>(std::move(datum), std::move(seq));
}

LabelledGraph build_binfty(const SeqCrystal& S, long long budget) {
  return explore(S, {S.vacuum()}, budget);
}

PsiReport psi_embedding(DatumPtr datum, const std::vector<int>& base, int i, long long budget) {
  PsiReport report;
  const CartanDatum& d = *datum;
  IndexSequence seq1 = IndexSequence(d, base).rotated_to(d, i);
  IndexSequence seq2 = seq1.shifted(d);
  auto S1 = std::make_shared<const SeqCrystal>(datum, seq1);
  auto S2 = std::make_shared<const SeqCrystal>(datum, seq2);
  auto Bi = elementary(datum, i);
  auto T = tensor(S2, Bi);

  LabelledGraph G1 = build_binfty(*S1, budget);
  LabelledGraph GT = explore(*T, {Elem::pair(S2->vacuum(), Bi->identity())}, budget);

  auto detach = [&d, i](const Elem& x) -> std::optional<Elem> {
    const auto& entries = x.entries();
    Elem first = entries.empty() ? trivial_elem(d, i) : entries.front();
    std::vector<Elem> rest(entries.begin() + (entries.empty() ? 0 : 1), entries.end());
    return Elem::pair(Elem::seq(std::move(rest)), first);
  };

  report.vacuum_image_ok = *detach(S1->vacuum()) == Elem::pair(S2->vacuum(), Bi->identity());
  report.morphism = check_strict_morphism(detach, *S1, G1, *T, &GT);
  return report;
}

IsoReport sequence_independence(DatumPtr datum, const std::vector<int>& base1, const std::vector<int>& base2,
                                long long budget) {
  auto S1 = sequence_crystal(datum, base1);
  auto S2 = sequence_crystal(datum, base2);
  LabelledGraph G1 = build_binfty(*S1, budget);
  LabelledGraph G2 = build_binfty(*S2, budget);
  return sync_isomorphism(*S1, G1, *S2, G2);
}

}  // namespace bbc

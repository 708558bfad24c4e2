#include "bbc/checks.hpp"

#include <deque>

namespace bbc {

namespace {

std::string op_str(const CartanDatum& d, int i, long long l) {
  return "(" + d.name(i) + "," + std::to_string(l) + ")";
}

}  // namespace

AxiomReport check_axioms(const Crystal& S, const LabelledGraph& G) {
  AxiomReport report;
  const CartanDatum& d = S.datum();
  auto ops = d.operators(G.budget);

  for (const auto& node : G.nodes) {
    const Elem& b = node.elem;

    // (iii) phi_i = eps_i + <h_i, wt>
    for (int i = 0; i < d.rank(); ++i) {
      ExtInt want = node.eps[static_cast<size_t>(i)] + d.pairing(i, node.wt);
      if (node.phi[static_cast<size_t>(i)] != want)
        report.violations.push_back({3, b, i, 0,
                                     "phi = " + node.phi[static_cast<size_t>(i)].str() + ", eps + <h_i,wt> = " +
                                         want.str()});
    }

    for (const auto& [i, l] : ops) {
      ExtInt eps_b = node.eps[static_cast<size_t>(i)];
      ExtInt phi_b = node.phi[static_cast<size_t>(i)];
      auto fb = S.f(i, l, b);
      auto eb = S.e(i, l, b);

      // (vii) phi = -inf annihilates
      if (!phi_b.finite() && (fb || eb))
        report.violations.push_back({7, b, i, l, "phi = -inf but an operator acts"});

      if (fb) {
        if (S.wt(*fb) != node.wt.plus_alpha(i, -l))
          report.violations.push_back({2, b, i, l, "wt(f b) != wt(b) - l*alpha_i"});
        auto back = S.e(i, l, *fb);
        if (!back || !(*back == b))
          report.violations.push_back({4, b, i, l, "e(f b) != b"});
        if (d.real(i)) {
          if (S.eps(i, *fb) != eps_b + 1 || S.phi(i, *fb) != phi_b - 1)
            report.violations.push_back({5, b, i, l, "real statistics step under f"});
        } else {
          long long shift = l * d.a(i, i);
          if (S.eps(i, *fb) != eps_b || S.phi(i, *fb) != phi_b - shift)
            report.violations.push_back({6, b, i, l, "imaginary statistics step under f"});
        }
      }
      if (eb) {
        if (S.wt(*eb) != node.wt.plus_alpha(i, l))
          report.violations.push_back({1, b, i, l, "wt(e b) != wt(b) + l*alpha_i"});
        auto back = S.f(i, l, *eb);
        if (!back || !(*back == b))
          report.violations.push_back({4, b, i, l, "f(e b) != b"});
        if (d.real(i)) {
          if (S.eps(i, *eb) != eps_b - 1 || S.phi(i, *eb) != phi_b + 1)
            report.violations.push_back({5, b, i, l, "real statistics step under e"});
        } else {
          long long shift = l * d.a(i, i);
          if (S.eps(i, *eb) != eps_b || S.phi(i, *eb) != phi_b + shift)
            report.violations.push_back({6, b, i, l, "imaginary statistics step under e"});
        }
      }
    }
  }
  return report;
}

std::vector<std::string> MorphismReport::all_problems() const {
  std::vector<std::string> out;
  auto add = [&out](const char* tag, const std::vector<std::string>& v) {
    for (const auto& s : v) out.push_back(std::string(tag) + ": " + s);
  };
  add("undefined", undefined);
  add("wt", wt_mismatch);
  add("eps", eps_mismatch);
  add("phi", phi_mismatch);
  add("f-commute", f_commute);
  add("e-commute", e_commute);
  add("image", not_in_target);
  add("injectivity", injectivity);
  return out;
}

MorphismReport check_strict_morphism(const ElemMap& map, const Crystal& SA, const LabelledGraph& GA,
                                     const Crystal& SB, const LabelledGraph* GB) {
  MorphismReport report;
  const CartanDatum& d = SA.datum();
  auto ops = d.operators(GA.budget);
  std::unordered_map<Elem, Elem, ElemHash> image_seen;

  for (const auto& node : GA.nodes) {
    const Elem& a = node.elem;
    auto m = map(a);
    if (!m) {
      report.undefined.push_back(a.repr(d));
      continue;
    }
    if (GB && !GB->contains(*m))
      report.not_in_target.push_back(a.repr(d) + " -> " + m->repr(d));

    auto [it, inserted] = image_seen.emplace(*m, a);
    if (!inserted)
      report.injectivity.push_back(a.repr(d) + " and " + it->second.repr(d) + " share image " + m->repr(d));

    if (SA.wt(a) != SB.wt(*m))
      report.wt_mismatch.push_back(a.repr(d) + ": wt " + SA.wt(a).repr(d) + " vs " + SB.wt(*m).repr(d));
    for (int i = 0; i < d.rank(); ++i) {
      if (SA.eps(i, a) != SB.eps(i, *m))
        report.eps_mismatch.push_back(a.repr(d) + ": eps_" + d.name(i) + " " + SA.eps(i, a).str() + " vs " +
                                      SB.eps(i, *m).str());
      if (SA.phi(i, a) != SB.phi(i, *m))
        report.phi_mismatch.push_back(a.repr(d) + ": phi_" + d.name(i) + " " + SA.phi(i, a).str() + " vs " +
                                      SB.phi(i, *m).str());
    }

    for (const auto& [i, l] : ops) {
      // psi(f a) = f psi(a), with psi(0) = 0.
      auto fa = SA.f(i, l, a);
      auto fb = SB.f(i, l, *m);
      if (!fa) {
        if (fb) report.f_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": null vs non-null");
      } else {
        if (!fb) {
          report.f_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": non-null vs null");
        } else {
          auto mfa = map(*fa);
          if (mfa) {
            if (!(*mfa == *fb))
              report.f_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": images disagree");
          } else if (GA.contains(*fa)) {
            report.undefined.push_back(fa->repr(d));
          }
          // Otherwise f a left the explored window; nothing further to pin.
        }
      }
      auto ea = SA.e(i, l, a);
      auto ebm = SB.e(i, l, *m);
      if (!ea) {
        if (ebm) report.e_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": null vs non-null");
      } else {
        if (!ebm) {
          report.e_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": non-null vs null");
        } else {
          auto mea = map(*ea);
          if (mea) {
            if (!(*mea == *ebm))
              report.e_commute.push_back(op_str(d, i, l) + " at " + a.repr(d) + ": images disagree");
          } else if (GA.contains(*ea)) {
            report.undefined.push_back(ea->repr(d));
          }
        }
      }
    }
  }
  return report;
}

NormalityReport is_normal(const Crystal& S, const std::vector<Elem>& elems) {
  NormalityReport report;
  const CartanDatum& d = S.datum();
  for (const Elem& b : elems) {
    for (int i = 0; i < d.rank(); ++i) {
      if (!d.imaginary(i)) continue;
      ExtInt e = S.eps(i, b);
      ExtInt p = S.phi(i, b);
      if (e != ExtInt(0)) {
        report.normal = false;
        report.witnesses.push_back({b, i, "eps", e});
      }
      if (p < ExtInt(0)) {
        report.normal = false;
        report.witnesses.push_back({b, i, "phi", p});
      }
    }
  }
  return report;
}

NormalityReport is_normal(const Crystal& S, const LabelledGraph& G) {
  std::vector<Elem> elems;
  elems.reserve(G.nodes.size());
  for (const auto& n : G.nodes) elems.push_back(n.elem);
  return is_normal(S, elems);
}

std::vector<Elem> highest_weight_elements(const Crystal& S, const LabelledGraph& G) {
  std::vector<Elem> out;
  auto ops = S.datum().operators(G.budget);
  for (const auto& node : G.nodes) {
    bool annihilated = true;
    for (const auto& [i, l] : ops) {
      if (S.e(i, l, node.elem)) {
        annihilated = false;
        break;
      }
    }
    if (annihilated) out.push_back(node.elem);
  }
  return out;
}

std::map<Weight, long long> weight_multiplicities(const LabelledGraph& G) {
  std::map<Weight, long long> counts;
  for (const auto& n : G.nodes) ++counts[n.wt];
  return counts;
}

IsoReport sync_isomorphism(const Crystal& SA, const LabelledGraph& GA, const Crystal& SB,
                           const LabelledGraph& GB) {
  IsoReport report;
  const CartanDatum& d = SA.datum();
  if (GA.roots.size() != GB.roots.size()) {
    report.problems.push_back("root counts differ");
    return report;
  }
  if (GA.budget != GB.budget) report.problems.push_back("budgets differ");

  std::unordered_map<Elem, Elem, ElemHash> back;
  std::deque<std::pair<Elem, Elem>> queue;

  auto match = [&](const Elem& a, const Elem& b) {
    auto fit = report.fwd.find(a);
    auto bit = back.find(b);
    if (fit == report.fwd.end() && bit == back.end()) {
      report.fwd.emplace(a, b);
      back.emplace(b, a);
      if (SA.wt(a) != SB.wt(b))
        report.problems.push_back("wt mismatch: " + a.repr(d) + " vs " + b.repr(d));
      for (int i = 0; i < d.rank(); ++i) {
        if (SA.eps(i, a) != SB.eps(i, b))
          report.problems.push_back("eps_" + d.name(i) + " mismatch: " + a.repr(d) + " vs " + b.repr(d));
        if (SA.phi(i, a) != SB.phi(i, b))
          report.problems.push_back("phi_" + d.name(i) + " mismatch: " + a.repr(d) + " vs " + b.repr(d));
      }
      queue.emplace_back(a, b);
      return;
    }
    bool okf = fit != report.fwd.end() && fit->second == b;
    bool okb = bit != back.end() && bit->second == a;
    if (!okf || !okb)
      report.problems.push_back("traversal collision at " + a.repr(d) + " / " + b.repr(d));
  };

  for (size_t r = 0; r < GA.roots.size(); ++r)
    match(GA.node(GA.roots[static_cast<int>(r)]).elem, GB.node(GB.roots[static_cast<int>(r)]).elem);

  while (!queue.empty() && report.problems.size() < 64) {
    auto [a, b] = queue.front();
    queue.pop_front();
    long long depth = GA.node(GA.id_of(a)).depth;
    for (const auto& [i, l] : d.operators(GA.budget - depth)) {
      auto fa = SA.f(i, l, a);
      auto fb = SB.f(i, l, b);
      if (fa.has_value() != fb.has_value()) {
        report.problems.push_back("edge " + op_str(d, i, l) + " present on one side only at " + a.repr(d));
        continue;
      }
      if (fa) match(*fa, *fb);
    }
    for (const auto& [i, l] : d.operators(GA.budget)) {
      auto ea = SA.e(i, l, a);
      auto eb = SB.e(i, l, b);
      if (ea.has_value() != eb.has_value())
        report.problems.push_back("raising " + op_str(d, i, l) + " defined on one side only at " + a.repr(d));
    }
  }

  if (report.fwd.size() != GA.nodes.size() || report.fwd.size() != GB.nodes.size())
    report.problems.push_back("node sets not exhausted: matched " + std::to_string(report.fwd.size()) + ", |A| = " +
                              std::to_string(GA.nodes.size()) + ", |B| = " + std::to_string(GB.nodes.size()));
  return report;
}

}  // namespace bbc

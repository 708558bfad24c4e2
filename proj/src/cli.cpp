#include "bbc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bbc/elementary.hpp"
#include "bbc/graph_io.hpp"

namespace bbc {

using nlohmann::json;

namespace {

Weight parse_weight(const json& j, const CartanDatum& d, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field + " must be an object of index -> integer", field);
  Weight w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto idx = d.index_of(it.key());
    if (!idx) throw ConfigError("unknown index '" + it.key() + "'", field + "." + it.key());
    if (!it.value().is_number_integer())
      throw ConfigError("coefficient must be an integer", field + "." + it.key());
    w += Weight::fundamental(*idx, it.value().get<long long>());
  }
  return w;
}

}  // namespace

JobConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("config is not valid JSON: ") + ex.what(), "");
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object", "");

  if (!j.contains("indices") || !j["indices"].is_array() || j["indices"].empty())
    throw ConfigError("indices must be a nonempty array of strings", "indices");
  std::vector<std::string> names;
  for (size_t k = 0; k < j["indices"].size(); ++k) {
    if (!j["indices"][k].is_string())
      throw ConfigError("index names must be strings", "indices[" + std::to_string(k) + "]");
    names.push_back(j["indices"][k].get<std::string>());
  }
  for (size_t k = 0; k < names.size(); ++k)
    for (size_t m = k + 1; m < names.size(); ++m)
      if (names[k] == names[m]) throw ConfigError("duplicate index name '" + names[k] + "'", "indices");

  if (!j.contains("cartan") || !j["cartan"].is_array())
    throw ConfigError("cartan must be a square integer matrix", "cartan");
  CartanDatum::Matrix a;
  for (size_t r = 0; r < j["cartan"].size(); ++r) {
    const auto& row = j["cartan"][r];
    if (!row.is_array()) throw ConfigError("cartan rows must be arrays", "cartan[" + std::to_string(r) + "]");
    std::vector<long long> vals;
    for (size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        throw ConfigError("cartan entries must be integers",
                          "cartan[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      vals.push_back(row[c].get<long long>());
    }
    a.push_back(std::move(vals));
  }

  if (!j.contains("symmetrizers") || !j["symmetrizers"].is_array())
    throw ConfigError("symmetrizers must be an array of positive integers", "symmetrizers");
  std::vector<long long> sym;
  for (size_t k = 0; k < j["symmetrizers"].size(); ++k) {
    if (!j["symmetrizers"][k].is_number_integer())
      throw ConfigError("symmetrizers must be integers", "symmetrizers[" + std::to_string(k) + "]");
    sym.push_back(j["symmetrizers"][k].get<long long>());
  }

  JobConfig cfg;
  try {
    cfg.datum = CartanDatum::validate(names, std::move(a), std::move(sym));
  } catch (const CartanError& ex) {
    throw ConfigError(ex.what(), "cartan");
  }

  if (j.contains("height")) {
    if (!j["height"].is_number_integer() || j["height"].get<long long>() < 0)
      throw ConfigError("height must be a nonnegative integer", "height");
    cfg.height = j["height"].get<long long>();
  }

  if (j.contains("sequence")) {
    if (!j["sequence"].is_array() || j["sequence"].empty())
      throw ConfigError("sequence must be a nonempty array of index names", "sequence");
    for (size_t k = 0; k < j["sequence"].size(); ++k) {
      if (!j["sequence"][k].is_string())
        throw ConfigError("sequence entries must be index names", "sequence[" + std::to_string(k) + "]");
      auto idx = cfg.datum->index_of(j["sequence"][k].get<std::string>());
      if (!idx)
        throw ConfigError("unknown index '" + j["sequence"][k].get<std::string>() + "'",
                          "sequence[" + std::to_string(k) + "]");
      cfg.base.push_back(*idx);
    }
    for (int i = 0; i < cfg.datum->rank(); ++i)
      if (std::find(cfg.base.begin(), cfg.base.end(), i) == cfg.base.end())
        throw ConfigError("sequence must cover every index; missing '" + cfg.datum->name(i) + "'", "sequence");
  } else {
    for (int i = 0; i < cfg.datum->rank(); ++i) cfg.base.push_back(i);
  }

  if (j.contains("lambda")) {
    cfg.lambda = parse_weight(j["lambda"], *cfg.datum, "lambda");
    if (auto bad = cfg.datum->dominance_violation(*cfg.lambda))
      throw ConfigError("lambda is not dominant: <h_" + cfg.datum->name(*bad) + ", lambda> < 0", "lambda");
  }
  if (j.contains("mu")) {
    cfg.mu = parse_weight(j["mu"], *cfg.datum, "mu");
    if (auto bad = cfg.datum->dominance_violation(*cfg.mu))
      throw ConfigError("mu is not dominant: <h_" + cfg.datum->name(*bad) + ", mu> < 0", "mu");
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

BuiltTarget build_factor(const JobConfig& cfg, const std::string& spec) {
  if (spec == "binfty") {
    auto S = sequence_crystal(cfg.datum, cfg.base);
    return {S, S->vacuum(), "binfty"};
  }
  if (spec == "blambda") {
    if (!cfg.lambda) throw ConfigError("target blambda requires lambda", "lambda");
    BLambdaModel M = blambda_model(cfg.datum, cfg.base, *cfg.lambda);
    return {M.structure, M.top, "blambda"};
  }
  if (spec == "tlambda") {
    auto S = shift_crystal(cfg.datum, cfg.lambda_or_zero());
    return {S, S->token(), "tlambda"};
  }
  if (spec == "c") {
    auto S = cutoff_crystal(cfg.datum);
    return {S, S->token(), "c"};
  }
  if (spec.rfind("elementary:", 0) == 0) {
    std::string name = spec.substr(11);
    auto idx = cfg.datum->index_of(name);
    if (!idx) throw ConfigError("unknown index '" + name + "' in target", "target");
    auto S = elementary(cfg.datum, *idx);
    return {S, S->identity(), spec};
  }
  throw ConfigError("unknown target component '" + spec + "'", "target");
}

}  // namespace

BuiltTarget build_target(const JobConfig& cfg, const std::string& target) {
  if (target.empty()) throw ConfigError("target must not be empty", "target");
  std::vector<std::string> factors;
  std::string cur;
  for (char ch : target) {
    if (ch == '*') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  factors.push_back(cur);
  BuiltTarget acc = build_factor(cfg, factors[0]);
  for (size_t k = 1; k < factors.size(); ++k) {
    BuiltTarget next = build_factor(cfg, factors[k]);
    acc = {tensor(acc.structure, next.structure), Elem::pair(acc.seed, next.seed),
           acc.name + "*" + next.name};
  }
  return acc;
}

namespace {

// Testing aid: reports phi off by one, breaking phi = eps + <h_i,wt> at
// every node so the axiom suite must fail with a witness.
class FaultyCrystal final : public Crystal {
 public:
  explicit FaultyCrystal(CrystalPtr inner) : Crystal(inner->datum_ptr()), inner_(std::move(inner)) {}
  Weight wt(const Elem& b) const override { return inner_->wt(b); }
  ExtInt eps(int i, const Elem& b) const override { return inner_->eps(i, b); }
  ExtInt phi(int i, const Elem& b) const override { return inner_->phi(i, b) + 1; }
  std::optional<Elem> e(int i, long long l, const Elem& b) const override { return inner_->e(i, l, b); }
  std::optional<Elem> f(int i, long long l, const Elem& b) const override { return inner_->f(i, l, b); }
  std::string describe() const override { return "faulty(" + inner_->describe() + ")"; }

 private:
  CrystalPtr inner_;
};

struct Check {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;
};

void add_check(std::vector<Check>& checks, std::string name, bool pass, std::vector<std::string> witnesses) {
  if (witnesses.size() > 8) witnesses.resize(8);
  checks.push_back({std::move(name), pass, std::move(witnesses)});
}

std::vector<std::string> axiom_witnesses(const AxiomReport& r, const CartanDatum& d) {
  std::vector<std::string> out;
  for (const auto& v : r.violations)
    out.push_back("clause (" + std::to_string(v.clause) + ") at " + v.witness.repr(d) + " i=" + d.name(v.i) +
                  " l=" + std::to_string(v.l) + ": " + v.detail);
  return out;
}

std::vector<std::string> normality_witnesses(const NormalityReport& r, const CartanDatum& d) {
  std::vector<std::string> out;
  for (const auto& w : r.witnesses)
    out.push_back(w.condition + "_" + d.name(w.i) + "(" + w.elem.repr(d) + ") = " + w.value.str());
  return out;
}

void run_axiom_suite(const JobConfig& cfg, bool inject_fault, std::vector<Check>& checks) {
  const CartanDatum& d = *cfg.datum;
  std::vector<std::pair<CrystalPtr, std::vector<Elem>>> structures;

  std::vector<std::pair<CrystalPtr, Elem>> simple;
  for (int i = 0; i < d.rank(); ++i) {
    auto S = elementary(cfg.datum, i);
    simple.emplace_back(S, S->identity());
  }
  auto T = shift_crystal(cfg.datum, cfg.lambda_or_zero());
  simple.emplace_back(T, T->token());
  auto C = cutoff_crystal(cfg.datum);
  simple.emplace_back(C, C->token());

  for (const auto& [S, seed] : simple) structures.push_back({S, {seed}});
  for (const auto& [SA, sa] : simple)
    for (const auto& [SB, sb] : simple)
      structures.push_back({tensor(SA, SB), {Elem::pair(sa, sb)}});

  auto seqS = sequence_crystal(cfg.datum, cfg.base);
  std::vector<Elem> seq_seeds = {seqS->vacuum()};
  // Off-component probes exercise the sequence operators on wilder states.
  auto probe_entry = [&](long long pos) {
    int i = seqS->sequence().at(pos);
    switch (d.classify(i)) {
      case IndexClass::Real:
        return Elem::real(i, 1);
      case IndexClass::Isotropic:
        return Elem::part(i, {1});
      case IndexClass::ImaginaryNonIsotropic:
        return Elem::comp(i, {1});
    }
    throw BbcError("unreachable");
  };
  seq_seeds.push_back(seqS->make({{2, probe_entry(2)}}));
  seq_seeds.push_back(seqS->make({{1, probe_entry(1)}, {3, probe_entry(3)}}));
  structures.push_back({seqS, seq_seeds});

  if (cfg.lambda) {
    BLambdaModel M = blambda_model(cfg.datum, cfg.base, *cfg.lambda);
    structures.push_back({M.structure, {M.top}});
  }

  bool faulted = false;
  for (auto& [S, seeds] : structures) {
    CrystalPtr used = S;
    std::string name = "axioms: " + S->describe();
    if (inject_fault && !faulted) {
      used = std::make_shared<const FaultyCrystal>(S);
      name = "axioms: " + used->describe();
      faulted = true;
    }
    try {
      LabelledGraph G = explore(*used, seeds, cfg.height);
      AxiomReport r = check_axioms(*used, G);
      add_check(checks, name, r.ok(), axiom_witnesses(r, d));
    } catch (const InterfaceViolationError& ex) {
      add_check(checks, name, false, {ex.what()});
    }
  }
}

void run_normal_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  const CartanDatum& d = *cfg.datum;
  bool has_imaginary = false;
  for (int i = 0; i < d.rank(); ++i) has_imaginary |= d.imaginary(i);

  auto seqS = sequence_crystal(cfg.datum, cfg.base);
  LabelledGraph Ginf = build_binfty(*seqS, cfg.height);
  NormalityReport rinf = is_normal(*seqS, Ginf);
  add_check(checks, "normal: binfty", rinf.normal, normality_witnesses(rinf, d));

  if (cfg.lambda) {
    BLambdaModel M = blambda_model(cfg.datum, cfg.base, *cfg.lambda);
    LabelledGraph Gl = build_blambda(M, cfg.height);
    NormalityReport rl = is_normal(*M.structure, Gl);
    add_check(checks, "normal: blambda", rl.normal, normality_witnesses(rl, d));
  }

  auto C = cutoff_crystal(cfg.datum);
  NormalityReport rc = is_normal(*C, std::vector<Elem>{C->token()});
  add_check(checks, "normal: C", rc.normal, normality_witnesses(rc, d));

  auto T = shift_crystal(cfg.datum, cfg.lambda_or_zero());
  NormalityReport rt = is_normal(*T, std::vector<Elem>{T->token()});
  bool t_expected_normal = !has_imaginary;
  add_check(checks, "normal: T expected " + std::string(t_expected_normal ? "normal" : "not normal"),
            rt.normal == t_expected_normal, normality_witnesses(rt, d));

  for (int i = 0; i < d.rank(); ++i) {
    if (!d.imaginary(i)) continue;
    bool second_imaginary = false;
    for (int j = 0; j < d.rank(); ++j) second_imaginary |= (j != i && d.imaginary(j));
    auto Bi = elementary(cfg.datum, i);
    LabelledGraph G = explore(*Bi, {Bi->identity()}, cfg.height);
    NormalityReport r = is_normal(*Bi, G);
    bool expected_normal = !second_imaginary;
    add_check(checks,
              "normal: B_" + d.name(i) + " expected " + std::string(expected_normal ? "normal" : "not normal"),
              r.normal == expected_normal, normality_witnesses(r, d));
  }
}

void run_assoc_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  const CartanDatum& d = *cfg.datum;
  const int r = d.rank();
  auto B = [&](int i) { return elementary(cfg.datum, i % r); };
  auto Bid = [&](int i) { return elementary(cfg.datum, i % r)->identity(); };
  auto T = shift_crystal(cfg.datum, cfg.lambda_or_zero());
  auto C = cutoff_crystal(cfg.datum);

  struct Triple {
    CrystalPtr a, b, c;
    Elem sa, sb, sc;
    std::string name;
  };
  std::vector<Triple> triples = {
      {B(0), B(0), B(0), Bid(0), Bid(0), Bid(0), "B*B*B (same index)"},
      {B(0), B(1), B(2), Bid(0), Bid(1), Bid(2), "B*B*B (cycled indices)"},
      {B(0), T, B(1), Bid(0), T->token(), Bid(1), "B*T*B"},
      {B(1), B(0), C, Bid(1), Bid(0), C->token(), "B*B*C"},
      {C, T, B(0), C->token(), T->token(), Bid(0), "C*T*B"},
  };
  for (const auto& t : triples) {
    AssocReport rep = assoc_isomorphism(t.a, t.b, t.c, t.sa, t.sb, t.sc, cfg.height);
    add_check(checks, "assoc: " + t.name, rep.ok(), rep.problems);
  }
}

void run_seqindep_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  std::vector<int> other(cfg.base.rbegin(), cfg.base.rend());
  if (other == cfg.base && cfg.base.size() > 1) {
    std::rotate(other.begin(), other.begin() + 1, other.end());
  }
  IsoReport rep = sequence_independence(cfg.datum, cfg.base, other, cfg.height);
  add_check(checks, "seqindep: base vs permuted base", rep.ok(), rep.problems);
}

std::vector<std::string> morphism_witnesses(const MorphismReport& r) { return r.all_problems(); }

void run_embedding_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  for (int i = 0; i < cfg.datum->rank(); ++i) {
    PsiReport rep = psi_embedding(cfg.datum, cfg.base, i, cfg.height);
    std::vector<std::string> witnesses = morphism_witnesses(rep.morphism);
    if (!rep.vacuum_image_ok) witnesses.push_back("vacuum image is not vacuum (x) (0)_i");
    add_check(checks, "embedding: index " + cfg.datum->name(i), rep.ok(), std::move(witnesses));
  }
}

void run_pi_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  if (!cfg.lambda) throw ConfigError("suite pi requires lambda", "lambda");
  BLambdaModel M = blambda_model(cfg.datum, cfg.base, *cfg.lambda);
  LabelledGraph Gl = build_blambda(M, cfg.height);
  LabelledGraph Ginf = build_binfty(*M.binfty, cfg.height);
  PiLambdaReport rep = pi_lambda(M, Gl, *M.binfty, Ginf);
  std::vector<std::string> witnesses;
  if (!rep.top_to_vacuum) witnesses.push_back("v_lambda does not map to vacuum");
  for (const auto* list : {&rep.f_commute, &rep.e_commute, &rep.wt_shift, &rep.eps_mismatch,
                           &rep.injectivity, &rep.image_missing})
    witnesses.insert(witnesses.end(), list->begin(), list->end());
  add_check(checks, "pi: projection clauses (i)-(iv) + injectivity", rep.ok(), std::move(witnesses));
}

void run_sum_suite(const JobConfig& cfg, std::vector<Check>& checks) {
  if (!cfg.lambda || !cfg.mu) throw ConfigError("suite sum requires lambda and mu", cfg.lambda ? "mu" : "lambda");
  SumEmbeddingReport rep = hw_sum_embedding(cfg.datum, cfg.base, *cfg.lambda, *cfg.mu, cfg.height);
  std::vector<std::string> witnesses = rep.iso.problems;
  auto more = rep.morphism.all_problems();
  witnesses.insert(witnesses.end(), more.begin(), more.end());
  add_check(checks, "sum: B(lambda+mu) into B(lambda)*B(mu)", rep.ok(), std::move(witnesses));
}

std::string emit_verify_report(const std::string& suite, const std::vector<Check>& checks, bool pass) {
  json out;
  out["suite"] = suite;
  out["pass"] = pass;
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  out["checks"] = arr;
  return out.dump(2) + "\n";
}

std::string run_count(const JobConfig& cfg, const std::string& target) {
  BuiltTarget t = build_target(cfg, target);
  LabelledGraph G = explore(*t.structure, {t.seed}, cfg.height);
  auto counts = weight_multiplicities(G);
  const Weight root_wt = G.node(G.roots.at(0)).wt;
  std::vector<std::pair<long long, const Weight*>> rows;
  rows.reserve(counts.size());
  for (const auto& [w, n] : counts) rows.push_back({(root_wt - w).rt_coeff_sum(), &w});
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->repr(*cfg.datum) < b.second->repr(*cfg.datum);
  });
  std::string out = "# depth\tweight\tcount\n";
  long long total = 0;
  for (const auto& [depth, w] : rows) {
    long long n = counts.at(*w);
    total += n;
    out += std::to_string(depth) + "\t" + w->repr(*cfg.datum) + "\t" + std::to_string(n) + "\n";
  }
  out += "total\t" + std::to_string(total) + "\n";
  return out;
}

}  // namespace

CliResult run_cli(const CliRequest& req) {
  CliResult result;
  try {
    JobConfig cfg = load_config(req.config_path);
    if (req.command == "graph") {
      BuiltTarget t = build_target(cfg, req.target);
      LabelledGraph G = explore(*t.structure, {t.seed}, cfg.height);
      if (req.format == "dot")
        result.output = to_dot(G, *cfg.datum);
      else if (req.format == "json")
        result.output = to_json(G, *cfg.datum);
      else
        throw ConfigError("format must be dot or json", "format");
      return result;
    }
    if (req.command == "count") {
      result.output = run_count(cfg, req.target);
      return result;
    }
    if (req.command == "verify") {
      std::vector<Check> checks;
      if (req.suite == "axioms")
        run_axiom_suite(cfg, req.inject_fault, checks);
      else if (req.suite == "embedding")
        run_embedding_suite(cfg, checks);
      else if (req.suite == "assoc")
        run_assoc_suite(cfg, checks);
      else if (req.suite == "sum")
        run_sum_suite(cfg, checks);
      else if (req.suite == "pi")
        run_pi_suite(cfg, checks);
      else if (req.suite == "normal")
        run_normal_suite(cfg, checks);
      else if (req.suite == "seqindep")
        run_seqindep_suite(cfg, checks);
      else
        throw ConfigError("unknown suite '" + req.suite + "'", "suite");
      bool pass = true;
      for (const auto& c : checks) pass = pass && c.pass;
      result.output = emit_verify_report(req.suite, checks, pass);
      result.exit_code = pass ? 0 : 1;
      return result;
    }
    throw ConfigError("unknown command '" + req.command + "'", "command");
  } catch (const ConfigError& ex) {
    result.exit_code = 2;
    result.error = std::string("config error") + (ex.field().empty() ? "" : " at " + ex.field()) + ": " +
                   ex.what() + "\n";
  } catch (const NotDominantError& ex) {
    result.exit_code = 2;
    result.error = std::string("config error: ") + ex.what() + "\n";
  } catch (const BbcError& ex) {
    result.exit_code = 2;
    result.error = std::string("error: ") + ex.what() + "\n";
  }
  return result;
}

}  // namespace bbc

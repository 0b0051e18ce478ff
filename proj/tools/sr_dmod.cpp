#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srdmod/cech.hpp"
#include "srdmod/ddm.hpp"
#include "srdmod/generate.hpp"
#include "srdmod/holonomy.hpp"
#include "srdmod/idealizer.hpp"
#include "srdmod/io.hpp"
#include "srdmod/localization.hpp"
#include "srdmod/parse.hpp"
#include "srdmod/sralgebra.hpp"
#include "srdmod/verify.hpp"

using namespace srdmod;
using nlohmann::json;

namespace {

struct Common {
  std::string file;
  unsigned characteristic = 0;
  unsigned max_degree = 6;
  std::string box = "-4:4";
  std::uint64_t seed = 42;
  bool pretty = false;
};

void emit(const json& doc, const Common& c) { std::cout << (c.pretty ? doc.dump(2) : doc.dump()) << "\n"; }

int exit_for(Verdict v) { return v == Verdict::fail ? 1 : 0; }

std::string prime_ideal(VertexSet p, const std::vector<std::string>& labels) {
  std::string s = "(";
  bool first = true;
  for (unsigned v : p.members()) {
    if (!first) s += ",";
    first = false;
    s += labels[v];
  }
  return s + ")";
}

ExponentVector monomial_of(const Polynomial& p) {
  if (!p.is_monomial() || !p.terms().begin()->second.is_one())
    throw InputError("expected a monic monomial, got " + p.to_string());
  return p.terms().begin()->first;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

LocalizedContext context_for(const std::shared_ptr<const SimplicialComplex>& cx, Field k, const std::string& f_text) {
  const Polynomial f = parse_polynomial(f_text, k, cx->labels());
  if (f.is_monomial() && f.terms().begin()->second.is_one())
    return LocalizedContext::saturate(cx, k, f.terms().begin()->first);
  return LocalizedContext::over_polynomial_ring(cx, f);
}

json growth_json(const GrowthReport& g) {
  json diffs = json::array();
  for (const auto& d : g.differences) diffs.push_back(d.get_str());
  return {{"mode", g.mode},
          {"r", g.r},
          {"dims", g.dims},
          {"differences", diffs},
          {"C", g.C.get_str()},
          {"leading", g.leading.get_str()},
          {"length_bound", g.length_bound.get_str()},
          {"verdict", to_string(g.verdict)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley-Reisner rings, their differential operators and verification checks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* sub, bool needs_file = true) {
    if (needs_file) sub->add_option("complex,--complex", c.file, "complex JSON file")->required();
    sub->add_option("--char", c.characteristic, "field characteristic (0 or a prime)");
    sub->add_flag("--json", c.pretty, "indented JSON output");
  };

  auto* check = app.add_subcommand("check", "is the complex a T-space");
  add_common(check);
  auto* ideal = app.add_subcommand("ideal", "face ideal generators");
  add_common(ideal);
  auto* primes = app.add_subcommand("primes", "minimal primes of the face ideal");
  add_common(primes);

  auto* hilb = app.add_subcommand("hilbert", "f-vector, Hilbert function and its partial sums");
  add_common(hilb);
  hilb->add_option("--max-degree", c.max_degree, "largest degree reported");

  auto* dbasis = app.add_subcommand("dbasis", "idealizer basis up to total degree B");
  add_common(dbasis);
  dbasis->add_option("--max-degree", c.max_degree, "degree bound B");

  auto* ddm = app.add_subcommand("ddm", "the quotient D/Dm at a rational point");
  add_common(ddm);
  std::string point, op_text, action = "nf";
  ddm->add_option("--point", point, "coordinates, e.g. 1,1,0,0")->required();
  ddm->add_option("--op", op_text, "operator, e.g. \"x d_x\"");
  ddm->add_option("--action", action, "nf | invert | rank | filtdim")
      ->check(CLI::IsMember({"nf", "invert", "rank", "filtdim"}));
  ddm->add_option("--max-degree", c.max_degree, "order bound for rank and filtdim");

  auto* actc = app.add_subcommand("act", "apply an operator to a fraction g/f^k");
  add_common(actc);
  std::string f_text, fraction;
  actc->add_option("--f", f_text, "the element inverted")->required();
  actc->add_option("--op", op_text, "operator")->required();
  actc->add_option("--fraction", fraction, "e.g. x/w^2")->required();

  auto* cech = app.add_subcommand("cech", "multigraded Cech cohomology in a box");
  add_common(cech);
  std::string ideal_text;
  cech->add_option("--ideal", ideal_text, "comma separated monomial generators")->required();
  cech->add_option("--box", c.box, "lo:hi");

  auto* holo = app.add_subcommand("holonomy", "growth of the filtrations");
  add_common(holo);
  unsigned i_max = 6, t_max = 3;
  holo->add_option("--imax", i_max, "largest index (the growth fit uses at least r + 2)");
  holo->add_option("--f", f_text, "also check the filtration on R_f");
  holo->add_option("--tmax", t_max, "largest divided power for R_f");

  auto* ver = app.add_subcommand("verify", "run every applicable check");
  add_common(ver);
  ver->add_option("--seed", c.seed, "random seed");
  ver->add_option("--max-degree", c.max_degree, "degree bound B");
  ver->add_option("--box", c.box, "lo:hi");

  auto* gen = app.add_subcommand("generate", "stream complexes as JSON lines");
  add_common(gen, false);
  unsigned gen_n = 3;
  std::string mode = "exhaustive";
  std::size_t count = 10;
  gen->add_option("n", gen_n, "number of vertices")->required();
  gen->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_option("--count", count, "number of random complexes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Field k = Field::of_characteristic(c.characteristic);

    if (gen->parsed()) {
      const auto list = mode == "exhaustive" ? exhaustive_complexes(gen_n) : random_complexes(gen_n, count, c.seed);
      for (const auto& cx : list) std::cout << complex_to_json(cx).dump() << "\n";
      return 0;
    }

    const auto cx = std::make_shared<const SimplicialComplex>(load_complex(c.file));
    const auto& labels = cx->labels();
    for (const auto& w : cx->warnings()) std::cerr << "warning: " << w << "\n";

    if (check->parsed()) {
      const TSpaceVerdict v = is_t_space(*cx);
      json out;
      if (v == TSpaceVerdict::not_applicable) {
        out["t_space"] = nullptr;
        out["reason"] = "face ideal is trivial";
      } else {
        out["t_space"] = v == TSpaceVerdict::yes;
      }
      emit(out, c);
      return 0;
    }
    if (ideal->parsed()) {
      json gens = json::array();
      for (VertexSet s : face_ideal_generators(*cx)) gens.push_back(ExponentVector::indicator(labels.size(), s).to_string(labels));
      json slack = json::array();
      for (unsigned v : cx->slack_vertices()) slack.push_back(labels[v]);
      emit({{"generators", gens}, {"slack", slack}}, c);
      return 0;
    }
    if (primes->parsed()) {
      json out = json::array();
      for (VertexSet p : minimal_primes(*cx)) out.push_back(prime_ideal(p, labels));
      emit({{"primes", out}, {"krull_dim", krull_dim(*cx)}}, c);
      return 0;
    }
    if (hilb->parsed()) {
      const HilbertData d = hilbert_data(*cx, c.max_degree);
      emit({{"f_vector", d.f_vector}, {"hilbert", d.h}, {"iterated", d.h1}, {"krull_dim", d.r}}, c);
      return 0;
    }
    if (dbasis->parsed()) {
      const XdelxResult r = verify_xdelx(*cx, c.max_degree);
      json out = {{"max_degree", c.max_degree}, {"basis_size", r.basis_size}, {"verdict", to_string(r.verdict)}};
      if (r.mismatch) {
        out["mismatch"] = r.mismatch->to_string(labels);
        out["mismatch_in_basis"] = r.mismatch_in_basis;
      }
      json all = json::array();
      for (const auto& m : dr_basis_up_to(*cx, c.max_degree)) all.push_back(m.to_string(labels));
      out["basis"] = all;
      emit(out, c);
      return exit_for(r.verdict);
    }
    if (ddm->parsed()) {
      const RationalPoint pt(cx, parse_point(point, k));
      if (action == "rank") {
        const RankCheck r = basis_rank_check(pt, c.max_degree);
        json dep = json::array();
        for (const auto& [t, coef] : r.dependency) dep.push_back({{"t", to_json(t)}, {"coef", coef.to_string()}});
        emit({{"point", pt.to_string()},
              {"count", r.count},
              {"rank", r.rank},
              {"truncation", r.truncation},
              {"dependency", dep},
              {"verdict", to_string(r.verdict)}},
             c);
        return exit_for(r.verdict);
      }
      if (action == "filtdim") {
        const FiltDimReport r = filt_dim_check(pt, c.max_degree);
        emit({{"point", pt.to_string()},
              {"dims", r.dims},
              {"nf_dims", r.nf_dims},
              {"h1", r.h1},
              {"order_counts", r.order_counts},
              {"verdict", to_string(r.verdict)}},
             c);
        return exit_for(r.verdict);
      }
      if (op_text.empty()) throw InputError("--op is required for --action " + action);
      const DROperator op(cx, parse_operator(op_text, k, labels));
      const DdmElement nf = normal_form(op, pt);
      if (action == "nf") {
        emit({{"point", pt.to_string()}, {"operator", op.to_string()}, {"normal_form", nf.to_string(labels)}}, c);
        return 0;
      }
      const auto res = find_inverse(nf, pt);
      if (const auto* f = std::get_if<RingElement>(&res)) {
        emit({{"w", nf.to_string(labels)}, {"inverse", f->to_string()}, {"verdict", "PASS"}}, c);
        return 0;
      }
      const auto& fw = std::get<FailureWitness>(res);
      emit({{"w", nf.to_string(labels)},
            {"verdict", "FAIL"},
            {"witness", {{"t_l", to_json(fw.t_l)}, {"g", fw.g.to_string(labels)}, {"g_w", fw.reduced.to_string(labels)}}}},
           c);
      return 1;
    }
    if (actc->parsed()) {
      const LocalizedContext ctx = context_for(cx, k, f_text);
      const auto [num, den] = parse_fraction(fraction, k, labels);
      unsigned power = 0;
      Polynomial fk = Polynomial::constant(k, labels.size(), Scalar::one(k));
      while (!(fk == den)) {
        if (++power > 64 || den.degree() < fk.degree()) throw InputError("denominator is not a power of f");
        fk = fk * ctx.f();
      }
      const Fraction u(ctx, num, power);
      const Fraction v = act(parse_operator(op_text, k, labels), u, ctx);
      emit({{"context", ctx.describe()}, {"input", u.to_string(ctx)}, {"result", v.to_string(ctx)}}, c);
      return 0;
    }
    if (cech->parsed()) {
      std::vector<ExponentVector> gens;
      for (const auto& g : split(ideal_text, ',')) gens.push_back(monomial_of(parse_polynomial(g, k, labels)));
      if (gens.empty()) throw InputError("--ideal needs at least one generator");
      const auto [lo, hi] = parse_box(c.box);
      const CechTable t = cech_cohomology(*cx, gens, lo, hi);
      json nonzero = json::array();
      for (const auto& e : t.entries)
        if (e.dim > 0) nonzero.push_back({{"j", e.j}, {"m", to_string(e.m)}, {"dim", e.dim}});
      json cand = json::object();
      for (std::size_t j = 0; j <= gens.size(); ++j) {
        json ps = json::array();
        for (VertexSet p : candidate_ass_primes(t, *cx, j)) ps.push_back(prime_ideal(p, labels));
        cand[std::to_string(j)] = ps;
      }
      emit({{"box", c.box},
            {"d_squared_zero", t.d_squared_zero},
            {"nonzero", nonzero},
            {"candidate_primes", cand},
            {"candidate_primes_note", "heuristic: box-bounded"}},
           c);
      return t.d_squared_zero ? 0 : 1;
    }
    if (holo->parsed()) {
      const GrowthReport g = r_filtration_report(*cx, std::max(i_max, krull_dim(*cx) + 2));
      std::vector<std::uint64_t> bern;
      for (unsigned i = 0; i <= i_max; ++i) bern.push_back(bernstein_dim(*cx, i));
      json out = {{"growth", growth_json(g)}, {"bernstein_dims", bern}};
      Verdict overall = g.verdict;
      if (!f_text.empty()) {
        const LocalizedContext ctx = context_for(cx, k, f_text);
        const RfCheck rc = rf_filtration_check(ctx, i_max, t_max);
        json r = {{"context", ctx.describe()}, {"checked", rc.checked}, {"verdict", to_string(rc.verdict)}};
        if (rc.witness)
          r["witness"] = {{"variable", labels[rc.witness->variable]},
                          {"t", rc.witness->t},
                          {"j", rc.witness->j},
                          {"u", rc.witness->u.to_string(labels)},
                          {"image", rc.witness->result},
                          {"level", rc.witness->level}};
        out["rf"] = r;
        if (rc.verdict == Verdict::fail) overall = Verdict::fail;
      }
      emit(out, c);
      return exit_for(overall);
    }
    if (ver->parsed()) {
      VerifyOptions opt;
      opt.seed = c.seed;
      opt.field = k;
      opt.max_degree = c.max_degree;
      std::tie(opt.box_lo, opt.box_hi) = parse_box(c.box);
      const VerifyReport rep = run_verify(*cx, opt);
      emit(rep.to_json(), c);
      return rep.exit_code();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

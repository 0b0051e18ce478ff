#include "srdmod/verify.hpp"

#include <algorithm>

#include "srdmod/cech.hpp"
#include "srdmod/ddm.hpp"
#include "srdmod/generate.hpp"
#include "srdmod/holonomy.hpp"
#include "srdmod/idealizer.hpp"
#include "srdmod/io.hpp"
#include "srdmod/localization.hpp"
#include "srdmod/oracles.hpp"
#include "srdmod/sralgebra.hpp"

namespace srdmod {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t VerifyReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const VerifyRecord& r) { return r.verdict == v; }));
}

int VerifyReport::exit_code() const { return count(Verdict::fail) > 0 ? 1 : 0; }

json VerifyReport::to_json() const {
  json recs = json::array();
  for (const auto& r : records)
    recs.push_back({{"check", r.check},
                    {"claim", r.claim},
                    {"instance", r.instance},
                    {"verdict", srdmod::to_string(r.verdict)},
                    {"witness", r.witness}});
  return {{"schema", kVerifySchema},
          {"version", kToolVersion},
          {"seed", options.seed},
          {"options",
           {{"char", options.field.characteristic()},
            {"max_degree", options.max_degree},
            {"box", std::to_string(options.box_lo) + ":" + std::to_string(options.box_hi)}}},
          {"complex", complex},
          {"summary",
           {{"pass", count(Verdict::pass)}, {"fail", count(Verdict::fail)}, {"na", count(Verdict::not_applicable)}}},
          {"records", recs}};
}

namespace {

class Suite {
 public:
  Suite(const SimplicialComplex& cx, const VerifyOptions& opt)
      : cx_(std::make_shared<const SimplicialComplex>(cx)), opt_(opt), rng_(opt.seed) {
    base_ = cx.describe();
  }

  VerifyReport run() {
    complex_checks();
    sralgebra_checks();
    weyl_checks();
    idealizer_checks();
    ddm_checks();
    holonomy_checks();
    localization_checks();
    cech_checks();
    VerifyReport rep;
    rep.options = opt_;
    rep.complex = base_;
    rep.records = std::move(records_);
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
      if (a.check != b.check) return a.check < b.check;
      return fnv1a(a.instance) < fnv1a(b.instance);
    });
    return rep;
  }

 private:
  const SimplicialComplex& cx() const { return *cx_; }
  std::size_t n() const { return cx_->num_vertices(); }
  const std::vector<std::string>& labels() const { return cx_->labels(); }

  void add(std::string check, std::string claim, std::string params, Verdict v, json witness = json::object()) {
    records_.push_back({std::move(check), std::move(claim), base_ + (params.empty() ? "" : " " + params), v,
                        std::move(witness)});
  }

  static Verdict pass_if(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

  void complex_checks() {
    const TSpaceVerdict fast = is_t_space(cx());
    const TSpaceVerdict brute = oracle::t_space(cx());
    add("complex.t_space", "vertex separation agrees with separation of all face/set pairs", "", pass_if(fast == brute),
        {{"vertex_criterion", to_string(fast)}, {"full_definition", to_string(brute)}});

    if (fast != TSpaceVerdict::yes) {
      add("complex.link_closure", "links of faces of a T-space are T-spaces", "", Verdict::not_applicable,
          {{"reason", "complex is not a T-space"}});
    } else {
      json bad = json::array();
      for (VertexSet f : cx().faces()) {
        const SimplicialComplex lk = link(cx(), f);
        if (is_t_space(lk) == TSpaceVerdict::no) bad.push_back(f.to_string(labels()));
      }
      add("complex.link_closure", "links of faces of a T-space are T-spaces", "", pass_if(bad.empty()),
          {{"failing_faces", bad}});
    }

    json mism = json::array();
    for (VertexSet f : cx().faces()) {
      std::set<std::set<std::string>> got;
      const SimplicialComplex lk = link(cx(), f);
      for (VertexSet g : lk.faces()) {
        std::set<std::string> names;
        for (unsigned v : g.members()) names.insert(lk.labels()[v]);
        got.insert(names);
      }
      if (got != oracle::link_faces(cx(), f)) mism.push_back(f.to_string(labels()));
    }
    add("complex.link", "link faces match the defining enumeration", "", pass_if(mism.empty()), {{"faces", mism}});
  }

  void sralgebra_checks() {
    const auto gens = face_ideal_generators(cx());
    const auto brute = oracle::minimal_non_faces(cx());
    json g = json::array();
    for (VertexSet s : gens) g.push_back(ExponentVector::indicator(n(), s).to_string(labels()));
    add("sralgebra.face_ideal", "face ideal generators are the minimal non-faces", "", pass_if(gens == brute),
        {{"generators", g}});

    json bad = json::array();
    for (unsigned j = 0; j <= 8; ++j) {
      // The odometer oracle visits (j+1)^n vectors; keep it bounded.
      double work = 1;
      for (std::size_t i = 0; i < n(); ++i) work *= j + 1;
      if (work > 2e6) break;
      const auto fast = hilbert(cx(), j);
      const auto slow = oracle::hilbert(cx(), j);
      if (fast != slow) bad.push_back({{"j", j}, {"closed_form", fast}, {"count", slow}});
    }
    add("sralgebra.hilbert", "f-vector closed form equals monomial counting", "j<=8", pass_if(bad.empty()),
        {{"mismatches", bad}});
  }

  void weyl_checks() {
    const Field k = opt_.field;
    const std::size_t nv = std::min<std::size_t>(n(), 3);
    if (nv == 0) {
      add("weyl.compose_action", "composition agrees with successive action", "", Verdict::not_applicable);
      return;
    }
    json bad;
    int tried = 0;
    for (; tried < 25 && bad.is_null(); ++tried) {
      const DiffOp a = random_operator(rng_, k, nv, 4, 3);
      const DiffOp b = random_operator(rng_, k, nv, 4, 3);
      const Polynomial p = Polynomial::monomial(k, random_exponent(rng_, nv, 6));
      if (!(apply(compose(a, b), p) == apply(a, apply(b, p))))
        bad = {{"lhs", a.to_string()}, {"rhs", b.to_string()}, {"p", p.to_string()}};
    }
    add("weyl.compose_action", "composition agrees with successive action",
        "samples=25 vars=" + std::to_string(nv) + " char=" + std::to_string(k.characteristic()),
        pass_if(bad.is_null()), bad.is_null() ? json::object() : bad);
  }

  void idealizer_checks() {
    const unsigned b = std::min(opt_.max_degree, 4u);
    json mism = json::array();
    for_each_exponent_up_to(n(), b, [&](const ExponentVector& a) {
      for_each_exponent_up_to(n(), b - static_cast<unsigned>(a.degree()), [&](const ExponentVector& t) {
        if (mism.size() >= 5) return;
        if (traves_member(a, t, cx()) != oracle::idealizer_preserves(a, t, cx(), opt_.field))
          mism.push_back(OperatorMonomial{a, t}.to_string(labels()));
      });
    });
    // Over F_p the bounded oracle is only a heuristic: report, do not fail.
    const Verdict v = opt_.field.is_rational() ? pass_if(mism.empty()) : Verdict::not_applicable;
    add("idealizer.traves", "Traves' criterion matches the direct idealizer test",
        "B=" + std::to_string(b) + " char=" + std::to_string(opt_.field.characteristic()), v, {{"mismatches", mism}});

    const XdelxResult x = verify_xdelx(cx(), opt_.max_degree);
    json w = {{"basis_size", x.basis_size}};
    if (x.mismatch) {
      w["mismatch"] = x.mismatch->to_string(labels());
      w["mismatch_in_basis"] = x.mismatch_in_basis;
    }
    add("idealizer.xdelx", "the idealizer basis is {x^a d^[t] : supp t in supp a, a face}",
        "B=" + std::to_string(opt_.max_degree), x.verdict, w);
  }

  // Indicator of the largest facet, ties broken towards low vertex indices.
  RationalPoint default_point() const {
    VertexSet best = cx().facets().front();
    for (VertexSet h : cx().facets())
      if (h.size() > best.size() || (h.size() == best.size() && h.bits() < best.bits())) best = h;
    std::vector<Scalar> c(n(), Scalar::zero(opt_.field));
    for (unsigned v : best.members()) c[v] = Scalar::one(opt_.field);
    return RationalPoint(cx_, c);
  }

  void ddm_checks() {
    if (is_t_space(cx()) != TSpaceVerdict::yes || n() == 0) {
      for (const char* id : {"ddm.normal_form", "ddm.find_inverse", "ddm.basis_rank", "ddm.filt_dim"})
        add(id, "quotient D/Dm at a rational point", "", Verdict::not_applicable,
            {{"reason", "needs a T-space with at least one vertex"}});
      return;
    }
    const Field k = opt_.field;
    const RationalPoint c = default_point();
    const std::string at = "c=" + c.to_string();

    // normal_form against the truncated span of Dm.
    const unsigned deg = 4;
    const DmSpan span(c, deg + 2);
    const auto basis = dr_basis_up_to(cx(), deg);
    json bad;
    for (int s = 0; s < 20 && bad.is_null(); ++s) {
      DiffOp op(k, n());
      const auto terms = rng_.uniform(1, 4);
      for (std::uint64_t i = 0; i < terms; ++i)
        op.add_term(basis[rng_.uniform(0, basis.size() - 1)], Scalar(k, rng_.uniform_signed(-3, 3)));
      const DROperator d(cx_, op);
      const DdmElement nf = normal_form(d, c);
      if (span.residue(d.op()) != span.residue(to_operator(nf)))
        bad = {{"operator", d.to_string()}, {"normal_form", nf.to_string(labels())}};
    }
    add("ddm.normal_form", "the congruence rewriting agrees with elimination modulo Dm",
        at + " samples=20 truncation=" + std::to_string(deg + 2), pass_if(bad.is_null()),
        bad.is_null() ? json::object() : bad);

    // find_inverse on every x_i d_i.
    for (std::size_t i = 0; i < n(); ++i) {
      DdmElement w(k, n());
      w.add_term(ExponentVector::unit(n(), i), Scalar::one(k));
      const auto res = find_inverse(w, c);
      const std::string inst = at + " w=" + w.to_string(labels());
      if (const auto* f = std::get_if<RingElement>(&res)) {
        add("ddm.find_inverse", "some f in m satisfies f w = 1 in D/Dm", inst, Verdict::pass,
            {{"f", f->to_string()}});
      } else {
        const auto& fw = std::get<FailureWitness>(res);
        add("ddm.find_inverse", "some f in m satisfies f w = 1 in D/Dm", inst, Verdict::fail,
            {{"t_l", to_json(fw.t_l)}, {"g", fw.g.to_string(labels())}, {"g_w", fw.reduced.to_string(labels())}});
      }
    }

    const RankCheck rc = basis_rank_check(c, 2);
    json dep = json::array();
    for (const auto& [t, coef] : rc.dependency) dep.push_back({{"t", to_json(t)}, {"coef", coef.to_string()}});
    add("ddm.basis_rank", "the <t>, supp t a face, are independent in D/Dm", at + " B=2", rc.verdict,
        {{"count", rc.count}, {"rank", rc.rank}, {"truncation", rc.truncation}, {"dependency", dep}});

    const FiltDimReport fd = filt_dim_check(c, 3);
    add("ddm.filt_dim", "dim of F_i in D/Dm is at least H_1(R,i)", at + " i<=3", fd.verdict,
        {{"dims", fd.dims}, {"nf_dims", fd.nf_dims}, {"h1", fd.h1}, {"order_counts", fd.order_counts}});
  }

  void holonomy_checks() {
    const unsigned r = krull_dim(cx());
    const GrowthReport g = r_filtration_report(cx(), std::max(r + 2, 6u));
    add("holonomy.r_filtration", "H_1(R,i) grows like a degree r polynomial with leading coefficient >= 1/r!",
        "i_max=" + std::to_string(std::max(r + 2, 6u)), g.verdict,
        {{"mode", g.mode},
         {"r", g.r},
         {"dims", g.dims},
         {"C", g.C.get_str()},
         {"leading", g.leading.get_str()},
         {"length_bound", g.length_bound.get_str()}});

    if (n() == 0) {
      add("holonomy.rf_filtration", "G'_j filtration on R_f is compatible", "", Verdict::not_applicable);
    } else {
      const ExponentVector f = ExponentVector::unit(n(), n() - 1);
      const LocalizedContext ctx = LocalizedContext::saturate(cx_, opt_.field, f);
      const RfCheck rc = rf_filtration_check(ctx, 2, 2);
      json w = {{"checked", rc.checked}};
      if (rc.witness)
        w["witness"] = {{"variable", labels()[rc.witness->variable]},
                        {"t", rc.witness->t},
                        {"j", rc.witness->j},
                        {"u", rc.witness->u.to_string(labels())},
                        {"image", rc.witness->result}};
      add("holonomy.rf_filtration", "G'_j filtration on R_f is compatible",
          "f=" + f.to_string(labels()) + " j,t<=2", rc.verdict, w);
    }

    const std::size_t nv = std::max<std::size_t>(1, std::min<std::size_t>(n(), 3));
    json bad;
    for (int s = 0; s < 10 && bad.is_null(); ++s) {
      Polynomial f = random_polynomial(rng_, Field::rationals(), nv, 3, 3);
      if (f.is_zero()) continue;
      const auto j = static_cast<unsigned>(rng_.uniform(0, 3));
      const auto sd = static_cast<unsigned>(rng_.uniform(0, j));
      const auto var = static_cast<std::size_t>(rng_.uniform(0, nv - 1));
      const auto res = divided_derivative_divisibility(f, j, sd, var);
      if (res.verdict == Verdict::fail)
        bad = {{"f", f.to_string()}, {"j", j}, {"s", sd}, {"variable", var}, {"degree", res.degree}, {"bound", res.bound}};
    }
    add("holonomy.divisibility", "f^(j-s) divides d^[s] f^j with quotient degree <= s(deg f - 1)", "samples=10",
        pass_if(bad.is_null()), bad.is_null() ? json::object() : bad);
  }

  void localization_checks() {
    if (n() == 0 || !opt_.field.is_rational()) {
      add("localization.act", "quotient rule action agrees with calculus", "", Verdict::not_applicable,
          {{"reason", n() == 0 ? "no variables" : "calculus oracle runs over the rationals"}});
      return;
    }
    const Field q = Field::rationals();
    const ExponentVector fe = ExponentVector::unit(n(), n() - 1);
    const LocalizedContext ctx = LocalizedContext::saturate(cx_, q, fe);
    json bad;
    for (int s = 0; s < 15 && bad.is_null(); ++s) {
      const Polynomial g = random_polynomial(rng_, q, n(), 3, 3);
      const auto j = static_cast<unsigned>(rng_.uniform(0, 3));
      const auto t = static_cast<unsigned>(rng_.uniform(0, 3));
      const auto i = static_cast<std::size_t>(rng_.uniform(0, n() - 1));
      const Fraction u(ctx, g, j);
      const Fraction got = act(i, t, u, ctx);
      const auto ref = oracle::calculus_act(ctx.f(), g, j, i, t);
      if (!frac_equal(got, Fraction(ctx, ref.num, ref.k), ctx))
        bad = {{"g", g.to_string(labels())}, {"j", j}, {"t", t}, {"variable", labels()[i]},
               {"got", got.to_string(ctx)}};
    }
    add("localization.act", "quotient rule action agrees with calculus",
        "f=" + fe.to_string(labels()) + " samples=15", pass_if(bad.is_null()), bad.is_null() ? json::object() : bad);
  }

  void cech_checks() {
    double points = 1;
    for (std::size_t i = 0; i < n(); ++i) points *= opt_.box_hi - opt_.box_lo + 1;
    const std::string box = "box=" + std::to_string(opt_.box_lo) + ":" + std::to_string(opt_.box_hi);
    if (n() == 0 || points > 2e5) {
      add("cech.h0_saturation", "H^0 of the Cech complex is the saturation", box, Verdict::not_applicable,
          {{"reason", n() == 0 ? "no variables" : "box too large"}});
      return;
    }
    const std::vector<ExponentVector> gens{ExponentVector::unit(n(), n() - 1)};
    const std::string inst = box + " I=(" + gens[0].to_string(labels()) + ")";
    const CechTable table = cech_cohomology(cx(), gens, opt_.box_lo, opt_.box_hi);
    add("cech.d_squared", "Cech differentials square to zero", inst, pass_if(table.d_squared_zero));

    json bad;
    for (const auto& m : box_points(n(), opt_.box_lo, opt_.box_hi)) {
      const bool in_sat = std::all_of(m.begin(), m.end(), [](int v) { return v >= 0; }) &&
                          cx().is_face([&] {
                            VertexSet s;
                            for (std::size_t i = 0; i < n(); ++i)
                              if (m[i] > 0) s = s.with(static_cast<unsigned>(i));
                            return s;
                          }()) &&
                          oracle::killed_by_generators(cx(), gens, m);
      if ((table.dim(0, m) == 1) != in_sat) {
        bad = {{"multidegree", to_string(m)}, {"h0", table.dim(0, m)}};
        break;
      }
    }
    add("cech.h0_saturation", "H^0 of the Cech complex is the saturation", inst, pass_if(bad.is_null()),
        bad.is_null() ? json::object() : bad);

    for (std::size_t j = 0; j <= gens.size(); ++j) {
      json primes = json::array();
      for (VertexSet p : candidate_ass_primes(table, cx(), j)) primes.push_back(p.to_string(labels()));
      add("cech.candidate_primes", "HEURISTIC box-bounded associated prime candidates",
          inst + " j=" + std::to_string(j), Verdict::not_applicable, {{"candidates", primes}});
    }
  }

  std::shared_ptr<const SimplicialComplex> cx_;
  VerifyOptions opt_;
  Rng rng_;
  std::string base_;
  std::vector<VerifyRecord> records_;
};

}  // namespace

VerifyReport run_verify(const SimplicialComplex& cx, const VerifyOptions& options) {
  return Suite(cx, options).run();
}

}  // namespace srdmod

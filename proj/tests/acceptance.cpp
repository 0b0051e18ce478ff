// Acceptance gate: one PASS/FAIL line per criterion. A criterion passes only if
// every check holds exactly and it finishes inside its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "srdmod/cech.hpp"
#include "srdmod/ddm.hpp"
#include "srdmod/generate.hpp"
#include "srdmod/holonomy.hpp"
#include "srdmod/idealizer.hpp"
#include "srdmod/localization.hpp"
#include "srdmod/oracles.hpp"
#include "srdmod/sralgebra.hpp"

using namespace srdmod;

namespace {

const Field kQ = Field::rationals();

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::shared_ptr<const SimplicialComplex> shared(SimplicialComplex cx) {
  return std::make_shared<const SimplicialComplex>(std::move(cx));
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<std::string> generator_names(const SimplicialComplex& cx) {
  std::vector<std::string> out;
  for (VertexSet s : face_ideal_generators(cx))
    out.push_back(ExponentVector::indicator(cx.num_vertices(), s).to_string(cx.labels()));
  return out;
}

Outcome tripp_fixtures() {
  Outcome o;
  const auto cx = tripp_complex();
  o.require(generator_names(cx) == std::vector<std::string>{"x*w", "y*w", "z*w", "x*y*z"}, "face ideal");
  o.require(minimal_primes(cx) == std::vector<VertexSet>{VertexSet::of({0, 3}), VertexSet::of({1, 3}),
                                                         VertexSet::of({2, 3}), VertexSet::of({0, 1, 2})},
            "minimal primes");
  o.require(is_t_space(cx) == TSpaceVerdict::yes, "tripp is a t-space");
  o.require(is_t_space(two_edges_complex()) == TSpaceVerdict::no, "two edges is not a t-space");
  return o;
}

Outcome graph_law() {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto v = is_t_space(g);
      // A single vertex or a single edge is a full simplex.
      if (v == TSpaceVerdict::not_applicable) {
        ++skipped;
        continue;
      }
      std::vector<unsigned> deg(g.num_vertices(), 0);
      for (VertexSet h : g.facets())
        if (h.size() == 2)
          for (unsigned u : h.members()) ++deg[u];
      const bool leaf = std::find(deg.begin(), deg.end(), 1u) != deg.end();
      o.require((v == TSpaceVerdict::yes) == !leaf, "graph " + g.describe());
      ++checked;
    }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " graphs, " + std::to_string(skipped) +
              " full simplices skipped";
  return o;
}

Outcome link_closure() {
  Outcome o;
  std::size_t links = 0;
  for (const auto& cx : exhaustive_complexes(5)) {
    if (is_t_space(cx) != TSpaceVerdict::yes) continue;
    for (VertexSet f : cx.faces()) {
      o.require(is_t_space(link(cx, f)) != TSpaceVerdict::no, "link of " + f.to_string(cx.labels()) + " in " +
                                                                  cx.describe());
      ++links;
    }
  }
  if (o.ok) o.detail = std::to_string(links) + " links";
  return o;
}

Outcome hilbert_oracle() {
  Outcome o;
  Rng rng(2024);
  for (int s = 0; s < 25; ++s) {
    const auto cx = random_complex(static_cast<unsigned>(rng.uniform(1, 6)), rng);
    for (unsigned j = 0; j <= 8; ++j)
      o.require(hilbert(cx, j) == oracle::hilbert(cx, j), cx.describe() + " j=" + std::to_string(j));
  }
  return o;
}

Outcome weyl_oracle() {
  Outcome o;
  for (const Field k : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    Rng rng(500 + k.characteristic());
    for (int s = 0; s < 200 && o.ok; ++s) {
      const std::size_t n = rng.uniform(1, 3);
      const DiffOp a = random_operator(rng, k, n, 4, 3);
      const DiffOp b = random_operator(rng, k, n, 4, 3);
      const DiffOp c = random_operator(rng, k, n, 4, 3);
      const Polynomial p = Polynomial::monomial(k, random_exponent(rng, n, 6));
      o.require(apply(compose(a, b), p) == apply(a, apply(b, p)), "compose vs action over " + k.name());
      o.require(compose(compose(a, b), c) == compose(a, compose(b, c)), "associativity over " + k.name());
    }
  }
  for (unsigned t = 0; t <= 5; ++t)
    for (unsigned u = 0; u <= 5; ++u) {
      DiffOp rhs(kQ, 1);
      for (unsigned s = 0; s <= std::min(t, u); ++s)
        rhs.add_term({ExponentVector{u - s + 1}, ExponentVector{t - s}}, Scalar(kQ, binomial(u, s)));
      const DiffOp lhs = compose(DiffOp::x_dt(kQ, 1, 0, t), DiffOp::multiplication(Polynomial::monomial(kQ, ExponentVector{u})));
      o.require(lhs == rhs, "x d^[t] x^u at t=" + std::to_string(t) + " u=" + std::to_string(u));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (unsigned s = 0; s <= 4; ++s)
        for (unsigned t = 0; t <= 4; ++t)
          o.require(commutator(DiffOp::x_dt(kQ, 3, i, s), DiffOp::x_dt(kQ, 3, j, t)).is_zero(), "commutation");
      o.require(commutator(DiffOp::x_dt(kQ, 3, i, 3), DiffOp::multiplication(Polynomial::variable(kQ, 3, j))).is_zero(),
                "commutation with x_j");
    }
  return o;
}

Outcome xdelx_basis() {
  Outcome o;
  std::size_t complexes = 0;
  for (const auto& cx : exhaustive_complexes(5)) {
    if (is_t_space(cx) != TSpaceVerdict::yes) continue;
    ++complexes;
    const XdelxResult r = verify_xdelx(cx, 6);
    o.require(r.verdict == Verdict::pass, "basis on " + cx.describe());
    const std::size_t m = cx.num_vertices();
    for_each_exponent_up_to(m, 6, [&](const ExponentVector& a) {
      for_each_exponent_up_to(m, 6 - static_cast<unsigned>(a.degree()), [&](const ExponentVector& t) {
        if (!o.ok) return;
        o.require(traves_member(a, t, cx) == oracle::idealizer_preserves(a, t, cx, kQ),
                  "traves on " + cx.describe() + " " + OperatorMonomial{a, t}.to_string(cx.labels()));
      });
    });
  }
  if (o.ok) o.detail = std::to_string(complexes) + " t-spaces";
  return o;
}

Outcome ddm_quotient() {
  Outcome o;
  const auto cx = shared(tripp_complex());
  const RationalPoint c(cx, {Scalar(kQ, 1L), Scalar(kQ, 1L), Scalar(kQ, 0L), Scalar(kQ, 0L)});
  const unsigned deg = 4;
  const DmSpan span(c, deg + 2);
  const auto basis = dr_basis_up_to(*cx, deg);
  Rng rng(7);
  std::size_t inverses = 0, witnesses = 0;
  auto verify_inverse = [&](const DdmElement& w, const RingElement& f) {
    const DiffOp fw = compose(DiffOp::multiplication(f.polynomial()), to_operator(w));
    DdmElement one(kQ, 4);
    one.add_term(ExponentVector(4), Scalar::one(kQ));
    o.require(normal_form(DROperator(cx, fw), c) == one, "f w = 1 by rewriting");
    o.require(DmSpan(c, static_cast<unsigned>(fw.total_degree()) + 2).contains(fw - to_operator(one)),
              "f w = 1 by elimination");
  };
  for (int s = 0; s < 100; ++s) {
    DiffOp op(kQ, 4);
    const auto terms = rng.uniform(1, 4);
    for (std::uint64_t k = 0; k < terms; ++k)
      op.add_term(basis[rng.uniform(0, basis.size() - 1)], Scalar(kQ, rng.uniform_signed(-3, 3)));
    const DROperator d(cx, op);
    const DdmElement nf = normal_form(d, c);
    o.require(span.residue(d.op()) == span.residue(to_operator(nf)), "normal form of " + d.to_string());
    if (nf.is_zero() || nf.is_scalar()) continue;
    const auto res = find_inverse(nf, c);
    if (const auto* f = std::get_if<RingElement>(&res)) {
      ++inverses;
      verify_inverse(nf, *f);
    } else {
      ++witnesses;
    }
  }
  DdmElement xdx(kQ, 4), zdz(kQ, 4);
  xdx.add_term(ExponentVector{1, 0, 0, 0}, Scalar::one(kQ));
  zdz.add_term(ExponentVector{0, 0, 1, 0}, Scalar::one(kQ));
  const auto rx = find_inverse(xdx, c);
  o.require(std::holds_alternative<RingElement>(rx) && std::get<RingElement>(rx).to_string() == "-x + 1", "inverse of x d_x");
  if (const auto* f = std::get_if<RingElement>(&rx)) verify_inverse(xdx, *f);
  const auto rz = find_inverse(zdz, c);
  o.require(std::holds_alternative<FailureWitness>(rz), "z d_z failure witness");
  if (o.ok)
    o.detail = std::to_string(inverses) + " inverses verified, " + std::to_string(witnesses) +
               " failure witnesses among samples";
  return o;
}

Outcome filtration_dims() {
  Outcome o;
  const auto cx = shared(tripp_complex());
  const RationalPoint c(cx, {Scalar(kQ, 1L), Scalar(kQ, 1L), Scalar(kQ, 0L), Scalar(kQ, 0L)});
  const FiltDimReport r = filt_dim_check(c, 5);
  std::vector<std::uint64_t> dims(r.dims.begin(), r.dims.end());
  o.require(dims == r.h1, "dims " + join(dims) + " vs H_1 " + join(r.h1));
  o.require(bernstein_dim(*cx, 2) == 16, "bernstein_dim(tripp,2)");
  return o;
}

Outcome holonomic_growth() {
  Outcome o;
  Rng rng(99);
  int seen = 0;
  for (int s = 0; s < 5000 && seen < 20; ++s) {
    const auto cx = random_complex(static_cast<unsigned>(rng.uniform(1, 6)), rng);
    if (is_t_space(cx) != TSpaceVerdict::yes) continue;
    ++seen;
    const GrowthReport g = r_filtration_report(cx, 10);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), g.r);
    o.require(g.leading >= mpq_class(1, fact) && g.verdict == Verdict::pass, "growth on " + cx.describe());
  }
  o.require(seen == 20, "20 seeded t-spaces");
  const auto ctx = LocalizedContext::saturate(shared(tripp_complex()), kQ, ExponentVector{0, 0, 0, 1});
  const RfCheck rf = rf_filtration_check(ctx, 3, 3);
  o.require(rf.verdict == Verdict::pass, "filtration on R_w");
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = rng.uniform(1, 3);
    Polynomial f = random_polynomial(rng, kQ, n, 3, 3);
    while (f.is_zero()) f = random_polynomial(rng, kQ, n, 3, 3);
    const auto j = static_cast<unsigned>(rng.uniform(0, 3));
    const auto sd = static_cast<unsigned>(rng.uniform(0, j));
    const auto res = divided_derivative_divisibility(f, j, sd, rng.uniform(0, n - 1));
    o.require(res.verdict == Verdict::pass, "divisibility for " + f.to_string());
  }
  return o;
}

Outcome cech_probe() {
  Outcome o;
  const auto cx = tripp_complex();
  const CechTable t = cech_cohomology(cx, {ExponentVector{0, 0, 0, 1}}, -4, 4);
  o.require(t.d_squared_zero, "d^2 = 0");
  for (const auto& m : box_points(4, -4, 4)) {
    bool nonneg = true;
    VertexSet supp;
    for (std::size_t i = 0; i < 4; ++i) {
      nonneg = nonneg && m[i] >= 0;
      if (m[i] > 0) supp = supp.with(static_cast<unsigned>(i));
    }
    const bool in_xyz = nonneg && cx.is_face(supp) && supp.intersects(VertexSet::of({0, 1, 2}));
    o.require(t.dim(0, m) == (in_xyz ? 1u : 0u), "H^0 at " + to_string(m));
    const bool axis = m[0] == 0 && m[1] == 0 && m[2] == 0 && m[3] <= -1;
    o.require(t.dim(1, m) == (axis ? 1u : 0u), "H^1 at " + to_string(m));
  }
  o.require(candidate_ass_primes(t, cx, 1) == std::vector<VertexSet>{VertexSet::of({0, 1, 2, 3})}, "candidate primes");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tripp fixtures", 1.0, tripp_fixtures},
      {2, "graph law n<=6", 30.0, graph_law},
      {3, "link closure n<=5", 60.0, link_closure},
      {4, "hilbert oracle", 30.0, hilbert_oracle},
      {5, "weyl oracle", 60.0, weyl_oracle},
      {6, "idealizer basis n<=5 B=6", 300.0, xdelx_basis},
      {7, "D/Dm rewriting and inverses", 60.0, ddm_quotient},
      {8, "filtration dimensions in D/Dm", 60.0, filtration_dims},
      {9, "holonomic growth", 120.0, holonomic_growth},
      {10, "cech probe", 60.0, cech_probe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %-32s %8.2fs (limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    if (!in_time) std::printf("     time limit exceeded\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "tga/pipeline.hpp"

#include <random>

#include "tga/builtins.hpp"
#include "tga/coset.hpp"
#include "tga/lattice.hpp"
#include "tga/serialize.hpp"

namespace tga {

using nlohmann::json;

namespace {

void require_eq(const std::string& label, const AlgElt& got, const AlgElt& expected) {
  if (got != expected) throw VerificationError(label, expected.str(), got.str());
}

void require_eq(const std::string& label, const Tensor2& got, const Tensor2& expected) {
  if (got != expected) throw VerificationError(label, expected.str(), got.str());
}

void require_eq(const std::string& label, const Scalar& got, const Scalar& expected) {
  if (got != expected) throw VerificationError(label, expected.str(), got.str());
}

void require(const std::string& label, bool ok, const std::string& expected,
             const std::string& got) {
  if (!ok) throw VerificationError(label, expected, got);
}

AlgElt from_terms(int degree, const Rational& coeff,
                  const std::vector<const char*>& cycles) {
  AlgElt a(degree);
  for (const char* c : cycles) a.add_term(Perm::parse(c, degree), Scalar(coeff));
  return a;
}

AlgElt signed_terms(int degree, const Rational& coeff,
                    const std::vector<std::pair<const char*, int>>& cycles) {
  AlgElt a(degree);
  for (const auto& [c, sign] : cycles)
    a.add_term(Perm::parse(c, degree), Scalar(sign > 0 ? coeff : -coeff));
  return a;
}

// The printed 8-term element r of K[S4] whose square is (id - (1 2)(3 4))/2.
AlgElt printed_r(int degree) {
  return signed_terms(degree, Rational(1, 4),
                      {{"(1 3)", 1},
                       {"(1 2 3 4)", -1},
                       {"(2 3)", 1},
                       {"(1 3 4 2)", -1},
                       {"(1 2 4 3)", -1},
                       {"(1 4)", 1},
                       {"(1 4 3 2)", -1},
                       {"(2 4)", 1}});
}

AlgElt half_id_minus(int degree, const char* cycle) {
  AlgElt a(degree);
  a.add_term(Perm::identity(degree), Scalar(Rational(1, 2)));
  a.add_term(Perm::parse(cycle, degree), Scalar(Rational(-1, 2)));
  return a;
}

json check_list_json(const std::vector<CheckLine>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"check", c.label}, {"detail", c.detail}});
  return out;
}

json closure_matrix_json(const Lattice& x, const TwistElt* twist) {
  const auto& basis = x.basis();
  size_t n = basis.size();
  json products = json::array();
  for (size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (size_t j = 0; j < n; ++j)
      row.push_back(x.membership(basis[i] * basis[j]).member);
    products.push_back(row);
  }
  json coprod = json::array(), counit = json::array(), antipode = json::array();
  for (size_t i = 0; i < n; ++i) {
    Tensor2 d = twist ? twisted_coproduct(*twist, basis[i]) : coproduct(basis[i]);
    coprod.push_back(x.tensor_membership(d).member);
    counit.push_back(Lattice::in_ring(basis[i].counit(), x.ring()));
    AlgElt s = twist ? twisted_antipode(*twist, basis[i]) : basis[i].antipode();
    antipode.push_back(x.membership(s).member);
  }
  json out = {{"unit", x.membership(AlgElt::unit(x.degree())).member},
              {"products", products},
              {"coproduct", coprod},
              {"counit", counit},
              {"antipode", antipode}};
  if (twist)
    out["twist_in_tensor_square"] = x.tensor_membership(twist->value()).member &&
                                    x.tensor_membership(twist->inverse()).member;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// A5

PipelineResult pipeline_a5() {
  PipelineResult result;
  result.name = "a5";
  auto note = [&](std::string label, std::string detail = "") {
    result.checks.push_back({std::move(label), std::move(detail)});
  };

  BuiltinSetup setup = builtin_cocycle("a5-xi");
  SubgroupTable a5 = alternating_group(5);
  Perm tau = Perm::parse("(1 2 3 4 5)", 5);

  CosetDecomposition decomp = CosetDecomposition::make(a5, setup.ctx, setup.omega);
  const TwistElt& j = decomp.twist();
  const CosetBlock& block = decomp.block_of(tau);

  // the sixteen-element double coset, term for term
  std::vector<Perm> expected_coset;
  for (const char* c :
       {"(1 2 3 4 5)", "(1 4 3 2 5)", "(1 5)(2 4)", "(1 3 5)", "(1 4 5 3 2)",
        "(1 2 5 3 4)", "(1 5 3)", "(2 4)(3 5)", "(1 3)(4 5)", "(2 5 4)",
        "(1 5 4 3 2)", "(1 2 3 5 4)", "(2 4 5)", "(1 3)(2 5)", "(1 5 2 3 4)",
        "(1 4 3 5 2)"})
    expected_coset.push_back(Perm::parse(c, 5));
  std::sort(expected_coset.begin(), expected_coset.end());
  require("a5: double coset of (1 2 3 4 5)", block.coset() == expected_coset,
          "the printed 16-element list", "a different coset");
  note("double coset of (1 2 3 4 5) matches the printed 16-element list");

  // cocharacter mu = 4 e_eps tau e_eps
  Cocharacter mu = matrix_cocharacter(block);
  AlgElt expected_mu =
      setup.ctx.idem[0].scaled(Scalar(4)) * AlgElt::of(tau) * setup.ctx.idem[0];
  require_eq("a5: cocharacter 4 e_eps tau e_eps", mu.value, expected_mu);
  require("a5: cocharacter dimension", mu.dimension == 4, "4",
          std::to_string(mu.dimension));
  note("irreducible cocharacter is 4 e_eps tau e_eps of dimension 4");

  // Delta_J(mu) = Delta(mu) = 1/4 sum_{sigma in M tau M} sigma (x) sigma
  Tensor2 dmu = twisted_coproduct(j, mu.value);
  Tensor2 expected_dmu(5);
  for (const Perm& s : block.coset()) expected_dmu.add_term(s, s, Scalar(Rational(1, 4)));
  require_eq("a5: Delta_J(mu) diagonal expansion", dmu, expected_dmu);
  require_eq("a5: Delta_J(mu) = Delta(mu)", dmu, coproduct(mu.value));
  require("a5: Delta_J(mu) term count", dmu.term_count() == 16, "16",
          std::to_string(dmu.term_count()));
  note("Delta_J(mu) = Delta(mu) = 1/4 sum of 16 diagonal pure tensors");

  // y = (chi (x) Id) Delta_J(mu) with chi = chi1 + chi4 + 2 chi5
  ClassFunction chi = ClassFunction::a5(1) + ClassFunction::a5(4) +
                      ClassFunction::a5(5).scaled(Scalar(2));
  AlgElt y = slice_left(chi, dmu);
  AlgElt expected_y = from_terms(5, Rational(3, 4),
                                 {"(1 5)(2 4)", "(2 4)(3 5)", "(1 3)(4 5)", "(1 3)(2 5)"});
  require_eq("a5: y", y, expected_y);
  note("y = 3/4((1 5)(2 4) + (2 4)(3 5) + (1 3)(4 5) + (1 3)(2 5))");

  Scalar chi1_of_y = apply_char(ClassFunction::a5(1), y);
  require_eq("a5: chi1(y)", chi1_of_y, Scalar(3));

  // y^2, the printed thirteen-term expansion
  AlgElt y2 = y * y;
  AlgElt expected_y2 = from_terms(
      5, Rational(9, 16),
      {"(1 5 2 4 3)", "(1 3 4 2 5)", "(1 5 4 2 3)", "(1 3 2 4 5)", "(1 3 5)",
       "(1 5 3)", "(4 5 2)", "(4 2 5)", "(1 4 2 5 3)", "(1 3 5 2 4)", "(1 2 4 5 3)",
       "(1 3 5 4 2)"});
  expected_y2.add_term(Perm::identity(5), Scalar(Rational(36, 16)));
  require_eq("a5: y^2", y2, expected_y2);
  note("y^2 matches the printed 13-term expansion");

  // witness chi4(y^2) = 27/4
  Scalar witness = apply_char(ClassFunction::a5(4), y2);
  require_eq("a5: chi4(y^2)", witness, Scalar(Rational(27, 4)));
  require("a5: witness is not an algebraic integer", !witness.is_algebraic_integer(),
          "false", "true");
  require("a5: witness 2-adic defect", witness.two_adic_defect() == 2, "2",
          std::to_string(witness.two_adic_defect()));
  note("chi4(y^2) = 27/4, not an algebraic integer, 2-adic defect 2");

  // Prop-style sanity: the group-likes of the twisted algebra are exactly A4
  SubgroupTable a4(5, {Perm::parse("(1 2 3)", 5), Perm::parse("(1 2)(3 4)", 5)});
  std::vector<Perm> group_likes;
  for (const auto& b : decomp.blocks())
    for (const Perm& g : b.group_like_elements()) group_likes.push_back(g);
  std::sort(group_likes.begin(), group_likes.end());
  require("a5: group-likes are exactly A4", group_likes == a4.elements(),
          "the 12 elements of A4", std::to_string(group_likes.size()) + " elements");
  note("group-like elements of the twisted algebra are exactly A4");

  Certificate cert;
  cert.pipeline = "a5";
  cert.trail = {{"tau", algelt_to_json(AlgElt::of(tau))},
                {"mu", algelt_to_json(mu.value)},
                {"y", algelt_to_json(y)},
                {"y_squared", algelt_to_json(y2)},
                {"chi1_of_y", scalar_to_json(chi1_of_y)},
                {"witness", scalar_to_json(witness)}};
  cert.witness = witness;
  cert.defect = witness.two_adic_defect();
  result.certificate = std::move(cert);
  return result;
}

// ---------------------------------------------------------------------------
// S4

namespace {

struct S4Material {
  BuiltinSetup omega_setup = builtin_cocycle("s4-omega");
  BuiltinSetup kappa_setup = builtin_cocycle("s4-kappa");
  AlgElt x = half_id_minus(4, "(1 2)(3 4)");
  AlgElt y = half_id_minus(4, "(1 3)(2 4)");
  SubgroupTable s3{4, {Perm::parse("(1 2)", 4), Perm::parse("(1 2 3)", 4)}};

  Lattice make_lattice() const {
    AlgElt id = AlgElt::unit(4);
    std::vector<AlgElt> basis;
    for (const Perm& sigma : s3.elements()) {
      AlgElt s = AlgElt::of(sigma);
      basis.push_back(x * y * s);
      basis.push_back((id - x) * y * s);
      basis.push_back(x * (id - y) * s);
      basis.push_back((id - x) * (id - y) * s);
    }
    return Lattice(std::move(basis), Lattice::Ring::GaussianZ);
  }
};

}  // namespace

PipelineResult pipeline_s4() {
  PipelineResult result;
  result.name = "s4";
  auto note = [&](std::string label, std::string detail = "") {
    result.checks.push_back({std::move(label), std::move(detail)});
  };

  S4Material mat;
  SubgroupTable s4 = symmetric_group(4);

  // (a) X is a Hopf order of the untwisted group algebra
  Lattice lattice = mat.make_lattice();
  ClosureReport plain = lattice_closure_check(lattice);
  require("s4: untwisted closure", plain.pass(), "all five axioms pass",
          plain.failures.empty() ? "ok" : plain.failures.front());
  note("X passes all five Hopf-order axioms under the untwisted structure");

  require("s4: x in X", lattice.membership(mat.x).member, "member", "not a member");
  require("s4: id in X", lattice.membership(AlgElt::unit(4)).member, "member",
          "not a member");
  require("s4: id/2 not in X",
          !lattice.membership(AlgElt::unit(4).scaled(Scalar(Rational(1, 2)))).member,
          "not a member", "member");
  note("membership: x and id lie in X, id/2 does not");

  // (b) the kappa twist T lies in X (x) X and X stays closed when twisted by T
  TwistElt t = TwistElt::build(mat.kappa_setup.ctx, mat.kappa_setup.omega);
  require("s4: T = T^-1", t.value() == t.inverse(), "equal", "different");
  Tensor2 expected_t = Tensor2::pure(AlgElt::unit(4) - mat.x, AlgElt::unit(4)) +
                       Tensor2::pure(mat.x, AlgElt::of(Perm::parse("(1 2)", 4)));
  require_eq("s4: printed form of T", t.value(), expected_t);
  ClosureReport twisted = lattice_closure_check(lattice, &t);
  require("s4: twisted closure with T", twisted.pass(),
          "all axioms plus T in X (x) X pass",
          twisted.failures.empty() ? "ok" : twisted.failures.front());
  note("T = (id - x)(x)id + x(x)(1 2) lies in X (x) X; twisted closure passes");

  // the omega twist J itself does not fit in X (x) X
  TwistElt j = TwistElt::build(mat.omega_setup.ctx, mat.omega_setup.omega);
  require("s4: J not in X (x) X", !lattice.tensor_membership(j.value()).member,
          "not a member", "member");
  note("J is not contained in X (x) X");

  // (c) r = (chi4 (x) Id) Delta_J(mu) for the (1 2 3) block cocharacter
  CosetDecomposition decomp =
      CosetDecomposition::make(s4, mat.omega_setup.ctx, mat.omega_setup.omega);
  Perm tau = Perm::parse("(1 2 3)", 4);
  const CosetBlock& block = decomp.block_of(tau);
  Cocharacter mu = matrix_cocharacter(block);
  require_eq("s4: mu = 4 e_eps tau e_eps", mu.value,
             mat.omega_setup.ctx.idem[0].scaled(Scalar(4)) * AlgElt::of(tau) *
                 mat.omega_setup.ctx.idem[0]);

  Tensor2 dmu = twisted_coproduct(j, mu.value);
  AlgElt r = slice_left(ClassFunction::s4(4), dmu);
  require_eq("s4: printed form of r", r, printed_r(4));
  note("r matches the printed 8-term form");

  // r = 2(e_(0,1) tau e_(0,1) - e_(1,0) tau e_(1,0)) with the printed expansions
  const auto& idem = mat.omega_setup.ctx.idem;
  AlgElt b01 = idem[2] * AlgElt::of(tau) * idem[2];  // bits: (0,1) -> mask 2
  AlgElt b10 = idem[1] * AlgElt::of(tau) * idem[1];
  require_eq("s4: r as idempotent combination", r, (b01 - b10).scaled(Scalar(2)));
  AlgElt expected_b01 = signed_terms(
      4, Rational(1, 16),
      {{"(1 2 3)", 1},   {"(1 3)", 1},     {"(1 2 3 4)", -1}, {"(1 3 4)", -1},
       {"(2 3)", 1},     {"(1 3 2)", 1},   {"(2 3 4)", -1},   {"(1 3 4 2)", -1},
       {"(1 2 4 3)", -1}, {"(1 4 3)", -1}, {"(1 2 4)", 1},    {"(1 4)", 1},
       {"(2 4 3)", -1},  {"(1 4 3 2)", -1}, {"(2 4)", 1},     {"(1 4 2)", 1}});
  require_eq("s4: printed expansion of e_(0,1) tau e_(0,1)", b01, expected_b01);
  AlgElt expected_b10 = signed_terms(
      4, Rational(1, 16),
      {{"(1 2 3)", 1},   {"(1 3)", -1},    {"(1 2 3 4)", 1},  {"(1 3 4)", -1},
       {"(2 3)", -1},    {"(1 3 2)", 1},   {"(2 3 4)", -1},   {"(1 3 4 2)", 1},
       {"(1 2 4 3)", 1},  {"(1 4 3)", -1}, {"(1 2 4)", 1},    {"(1 4)", -1},
       {"(2 4 3)", -1},  {"(1 4 3 2)", 1}, {"(2 4)", -1},     {"(1 4 2)", 1}});
  require_eq("s4: printed expansion of e_(1,0) tau e_(1,0)", b10, expected_b10);
  note("r = 2(e_(0,1) tau e_(0,1) - e_(1,0) tau e_(1,0)), both expansions as printed");

  require_eq("s4: r^2 = x", r * r, mat.x);
  note("r^2 = (id - (1 2)(3 4))/2 = x");

  // the epsilon-idempotent dictionary on F = <(1 2)(3 4), (1 3)(2 4)>
  auto f_group = std::make_shared<ElemAbelian2Group>(
      4, std::vector<Perm>{Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
  AlgElt id = AlgElt::unit(4);
  std::array<AlgElt, 4> eps = {(id - mat.x) * (id - mat.y), mat.x * (id - mat.y),
                               (id - mat.x) * mat.y, mat.x * mat.y};
  for (uint32_t bits = 0; bits < 4; ++bits)
    require_eq("s4: epsilon idempotent " + std::to_string(bits),
               idempotent(LinChar(f_group, bits)), eps[bits]);
  note("epsilon_11 = xy, epsilon_01 = (id-x)y, epsilon_10 = x(id-y), "
       "epsilon_00 = (id-x)(id-y)");

  // (e) conjugation action of S3 on {eps01, eps10, eps11}
  for (const Perm& sigma : mat.s3.elements()) {
    int fixed = 0;
    for (uint32_t bits : {1u, 2u, 3u}) {
      AlgElt conj = eps[bits].conjugated_by(sigma);
      bool found = false;
      for (uint32_t other : {1u, 2u, 3u}) found = found || conj == eps[other];
      require("s4: conjugation permutes the idempotents", found, "a permutation",
              "leaves the set");
      if (conj == eps[bits]) ++fixed;
    }
    require("s4: action property for " + sigma.str(),
            fixed < 2 || sigma.is_identity(),
            "only id fixes two of eps01, eps10, eps11", sigma.str() + " fixes two");
  }
  note("only the identity of S3 fixes two of the three nontrivial idempotents");

  // (d) coefficient-extraction identity on random elements of K[F] K[S3]
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_int_distribution<int> coeff(-6, 6);
  Tensor3 sandwich = Tensor3::pure(eps[2], eps[1], eps[3]);  // eps01 (x) eps10 (x) eps11
  for (int trial = 0; trial < 20; ++trial) {
    std::array<AlgElt, 4> a = {AlgElt(4), AlgElt(4), AlgElt(4), AlgElt(4)};
    for (auto& part : a)
      for (const Perm& sigma : mat.s3.elements())
        part.add_term(sigma.padded(4), Scalar(coeff(rng)));
    AlgElt w(4);
    for (uint32_t bits = 0; bits < 4; ++bits) w += eps[bits] * a[bits];
    Tensor3 extracted = sandwich * coproduct3(w) * sandwich;
    Scalar lambda = a[0].coefficient(Perm::identity(4));
    require("s4: extraction identity", extracted == sandwich.scaled(lambda),
            "lambda_00,id eps01 (x) eps10 (x) eps11", "a different tensor");
  }
  note("(eps01 (x) eps10 (x) eps11) Delta^2(w) (eps01 (x) eps10 (x) eps11) = "
       "lambda_{00,id} eps01 (x) eps10 (x) eps11 on 20 random samples");

  // every irreducible character pairs integrally with the basis of X, the
  // dual-order fact used throughout
  for (int k = 1; k <= 5; ++k) {
    ClassFunction chi = ClassFunction::s4(k);
    for (const AlgElt& basis_elt : lattice.basis()) {
      Scalar value = apply_char(chi, basis_elt);
      require("s4: chi" + std::to_string(k) + " pairs integrally with X",
              value.is_algebraic_integer(), "an algebraic integer", value.str());
    }
  }
  note("all five irreducible characters pair integrally with the basis of X");

  // (f) (chi3 (x) chi3)(J((1 2 3) (x) (1 3 4))) = 1/2
  Tensor2 d = j.value() * Tensor2::pure(AlgElt::of(Perm::parse("(1 2 3)", 4)),
                                        AlgElt::of(Perm::parse("(1 3 4)", 4)));
  Scalar pairing;
  ClassFunction chi3 = ClassFunction::s4(3);
  for (const auto& [key, c] : d.terms())
    pairing += chi3.at(key.first) * chi3.at(key.second) * c;
  require_eq("s4: (chi3 (x) chi3)(J((1 2 3) (x) (1 3 4)))", pairing,
             Scalar(Rational(1, 2)));
  note("(chi3 (x) chi3)(J((1 2 3) (x) (1 3 4))) = 1/2");

  result.extra = {{"closure_untwisted", closure_matrix_json(lattice, nullptr)},
                  {"closure_twisted", closure_matrix_json(lattice, &t)}};
  return result;
}

// ---------------------------------------------------------------------------
// S8

namespace {

CharEval chi4_times_trivial() {
  return [chi4 = ClassFunction::s4(4)](const Perm& g) {
    std::vector<int> img(4);
    for (int k = 1; k <= 4; ++k) {
      if (g(k) > 4) throw std::invalid_argument("character: support outside S4 x Q");
      img[k - 1] = g(k);
    }
    for (int k = 5; k <= g.degree(); ++k)
      if (g(k) <= 4) throw std::invalid_argument("character: support outside S4 x Q");
    return chi4.at(Perm::from_images(img));
  };
}

}  // namespace

PipelineResult pipeline_s8() {
  PipelineResult result;
  result.name = "s8";
  auto note = [&](std::string label, std::string detail = "") {
    result.checks.push_back({std::move(label), std::move(detail)});
  };

  BuiltinSetup omega_setup = builtin_cocycle("s8-omega");
  BuiltinSetup kappa_setup = builtin_cocycle("s8-kappa");
  const CharContext& ctx = omega_setup.ctx;
  TwistElt j = TwistElt::build(ctx, omega_setup.omega);

  // Step 1: collapsing the Q factor projects the twist onto the restriction
  FactorSplit split{
      std::make_shared<ElemAbelian2Group>(
          8, std::vector<Perm>{Perm::parse("(1 2)", 8), Perm::parse("(3 4)", 8)}),
      std::make_shared<ElemAbelian2Group>(
          8, std::vector<Perm>{Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)})};
  TwistElt projected = project_twist(j, ctx, split);
  Cocycle restricted_omega = omega_setup.omega.restricted({1, 2});
  require("s8: restricted cocycle",
          restricted_omega == builtin_cocycle("s4-omega").omega,
          "the rank-2 bicharacter of the S4 setup", "a different cocycle");
  CharContext pctx = CharContext::make(split.p);
  TwistElt restriction = TwistElt::build(pctx, restricted_omega);
  require_eq("s8: projected twist", projected.value(), restriction.value());
  note("projecting along S4 x Q -> S4 yields the twist of the restricted cocycle");

  // Step 2 works inside A = (K[S4 Q])_J
  SubgroupTable g(8, {Perm::parse("(1 2)", 8), Perm::parse("(1 2 3 4)", 8),
                      Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
  require("s8: |S4 Q| = 96", g.order() == 96, "96", std::to_string(g.order()));
  CosetDecomposition decomp = CosetDecomposition::make(g, ctx, omega_setup.omega);

  Perm tau = Perm::parse("(1 2 3)", 8);
  const CosetBlock& block = decomp.block_of(tau);
  require("s8: |N| = 64", block.n_size() == 64, "64", std::to_string(block.n_size()));

  // M cap tau M tau^-1 = <t3, t4>
  SubgroupTable m_table = ctx.m->table();
  SubgroupTable stab = intersect(m_table, conjugated_subgroup(m_table, tau));
  SubgroupTable t34(8, {Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
  require("s8: M cap tau M tau^-1", stab.elements() == t34.elements(),
          "<(5 6), (7 8)>", "a different subgroup");
  note("M cap tau M tau^-1 = <t3, t4>, so |N| = 256/4 = 64");

  // N is generated by the six printed pairs
  {
    std::set<uint32_t> span{0};
    for (uint32_t gen : {0x01u, 0x02u, 0x11u, 0x22u, 0x44u, 0x88u}) {
      std::vector<uint32_t> ext;
      for (uint32_t s : span) ext.push_back(s ^ gen);
      span.insert(ext.begin(), ext.end());
    }
    std::vector<uint32_t> span_sorted(span.begin(), span.end());
    require("s8: N generators",
            span_sorted == block.pairs(),
            "the span of (eps,phi1),(eps,phi2),(phi1,phi1),(phi2,phi2),(phi3,phi3),"
            "(phi4,phi4)",
            "a different pair group");
  }
  note("N is generated by the six printed pairs");

  // Z is the printed four-element set
  std::vector<uint32_t> z = block.center_pairs();
  std::vector<uint32_t> expected_z = {0x00, (7u << 4) | 7u, (11u << 4) | 11u,
                                      (12u << 4) | 12u};
  std::sort(expected_z.begin(), expected_z.end());
  require("s8: center Z", z == expected_z,
          "{(eps,eps),(phi1phi2phi3,...),(phi3phi4,...),(phi1phi2phi4,...)}",
          "a different center");
  note("the center Z of the dual block algebra is the printed 4-element set");

  // the cocharacter Psi relative to the representative (1 2 3)
  Cocharacter psi = matrix_cocharacter(block, tau);
  require("s8: Psi dimension", psi.dimension == 4, "4", std::to_string(psi.dimension));
  AlgElt expected_psi(8);
  for (uint32_t mask : {0u, 7u, 12u, 11u})
    expected_psi += ctx.idem[mask] * AlgElt::of(tau) * ctx.idem[mask];
  expected_psi = expected_psi.scaled(Scalar(4));
  require_eq("s8: printed form of Psi", psi.value, expected_psi);
  note("Psi = 4(e_0000 tau e_0000 + e_1110 tau e_1110 + e_0011 tau e_0011 + "
       "e_1101 tau e_1101)");

  // the primitive central idempotent of the dual block algebra
  CentralIdempotentReport central = central_idempotent_check(block);
  require("s8: central idempotent", central.pass(),
          "idempotent, central, rank 16",
          "idempotent=" + std::to_string(central.idempotent) +
              " central=" + std::to_string(central.central) +
              " rank=" + std::to_string(central.rank));
  note("c = 1/4 sum_Z u_nu is a central idempotent whose ideal has dimension 16");

  // x = (Id (x) theta) Delta_J(Psi) with theta = chi4 (x) eps_Q
  Tensor2 dpsi = twisted_coproduct(j, psi.value);
  AlgElt x = slice_right(dpsi, chi4_times_trivial());
  AlgElt expected_x = printed_r(8) * AlgElt::of(Perm::parse("(5 6)(7 8)", 8));
  require_eq("s8: printed form of x", x, expected_x);
  note("x = 1/4((1 3) - (1 2 3 4) + ...) (x) (5 6)(7 8)");

  AlgElt x2 = x * x;
  AlgElt half = half_id_minus(8, "(1 2)(3 4)");
  require_eq("s8: x^2", x2, half);
  note("x^2 = (id - (1 2)(3 4))/2");

  // the relabeled copies via explicit renaming
  Perm relabel1 = Perm::parse("(1 3 5)(2 4 6)", 8);  // 1->3, 2->4, ..., 5->1, 6->2
  require_eq("s8: renamed element (3 4)(5 6)", x2.renamed(relabel1),
             half_id_minus(8, "(3 4)(5 6)"));
  Perm relabel2 = Perm::parse("(1 5)(2 6)(3 7)(4 8)", 8);
  require_eq("s8: renamed element (5 6)(7 8)", x2.renamed(relabel2),
             half_id_minus(8, "(5 6)(7 8)"));
  note("renaming gives (id - (3 4)(5 6))/2 and (id - (5 6)(7 8))/2");

  // e_alpha + e_{alpha + 1111} as a product of three simple averages
  for (uint32_t alpha = 0; alpha < 16; ++alpha) {
    AlgElt lhs = ctx.idem[alpha] + ctx.idem[alpha ^ 0xF];
    auto factor = [&](int bit_a, int bit_b, const char* pair) {
      AlgElt f(8);
      f.add_term(Perm::identity(8), Scalar(Rational(1, 2)));
      int sign = ((alpha >> bit_a) ^ (alpha >> bit_b)) & 1 ? -1 : 1;
      f.add_term(Perm::parse(pair, 8), Scalar(Rational(sign, 2)));
      return f;
    };
    AlgElt rhs = factor(0, 1, "(1 2)(3 4)") * factor(1, 2, "(3 4)(5 6)") *
                 factor(2, 3, "(5 6)(7 8)");
    require_eq("s8: idempotent pair sum for alpha=" + std::to_string(alpha), lhs, rhs);
  }
  note("e_alpha + e_{alpha+1111} factors through the three printed averages");

  // Step 3: the cocycle kappa, its coboundary relation and the twist T
  std::vector<Scalar> q(16, Scalar(1));
  for (uint32_t a = 0; a < 16; ++a)
    if ((a & 1) && (a & 4)) q[a] = Scalar(-1);
  require("s8: kappa = omega dq",
          omega_setup.omega.multiplied(coboundary(4, q)) == kappa_setup.omega,
          "equal cocycles", "different cocycles");
  note("kappa = omega dq with q(phi^alpha) = (-1)^(alpha1 alpha3)");

  TwistElt t = TwistElt::build(ctx, kappa_setup.omega);
  require("s8: T = T^-1", t.value() == t.inverse(), "equal", "different");

  // ell(psi) = sum_phi kappa(phi, psi) e_phi is a group element of M
  struct { uint32_t chr; const char* elt; } ell_table[] = {
      {1, "(5 6)"}, {2, "(1 2)"}, {4, "(3 4)"}, {8, "(1 2)(3 4)(5 6)"}};
  for (const auto& [chr, elt] : ell_table) {
    AlgElt ell(8);
    for (uint32_t phi = 0; phi < 16; ++phi)
      ell += ctx.idem[phi].scaled(kappa_setup.omega.value(phi, chr));
    require_eq("s8: ell(phi_" + std::to_string(chr) + ")", ell,
               AlgElt::of(Perm::parse(elt, 8)));
  }
  note("ell(phi1) = t3, ell(phi2) = t1, ell(phi3) = t2, ell(phi4) = t1 t2 t3");

  // the printed eight-term expansion of T
  struct { const char* elt; uint32_t m1, m2; } t_rows[] = {
      {"id", 0x0, 0xF},          {"(1 2)", 0x2, 0xD},
      {"(3 4)", 0x4, 0xB},       {"(5 6)", 0xE, 0x1},
      {"(1 2)(3 4)", 0x6, 0x9},  {"(1 2)(5 6)", 0xC, 0x3},
      {"(3 4)(5 6)", 0xA, 0x5},  {"(1 2)(3 4)(5 6)", 0x8, 0x7}};
  Tensor2 expected_t(8);
  for (const auto& [elt, m1, m2] : t_rows)
    expected_t += Tensor2::pure(AlgElt::of(Perm::parse(elt, 8)),
                                ctx.idem[m1] + ctx.idem[m2]);
  require_eq("s8: printed expansion of T", t.value(), expected_t);
  note("T matches the printed 8-term expansion sum ell(psi) (x) e_psi");

  // the conjugation chain down to y = (id - (1 2 3))/2
  AlgElt b = AlgElt::of(Perm::parse("(1 2)(3 4)", 8)) *
             AlgElt::of(Perm::parse("(4 5)", 8)) * half *
             AlgElt::of(Perm::parse("(4 5)", 8));
  AlgElt c1 = half + b;
  require_eq("s8: chain element (id - (3 5 4))/2", c1, half_id_minus(8, "(3 5 4)"));
  Perm sigma = Perm::parse("(1 4 3)(5 2)", 8);
  AlgElt y = c1.conjugated_by(sigma);
  require_eq("s8: y = (id - (1 2 3))/2", y, half_id_minus(8, "(1 2 3)"));
  note("(id-(1 2)(3 4))/2 + (1 2)(3 4)(4 5) ((id-(1 2)(3 4))/2) (4 5) = (id-(3 5 4))/2;"
       " conjugating by (1 4 3)(5 2) gives (id - (1 2 3))/2");

  // witness chi4(y) = 3/2
  Scalar witness = apply_char(ClassFunction::s4(4), y.restricted(4));
  require_eq("s8: chi4(y)", witness, Scalar(Rational(3, 2)));
  require("s8: witness is not an algebraic integer", !witness.is_algebraic_integer(),
          "false", "true");
  require("s8: witness 2-adic defect", witness.two_adic_defect() == 1, "1",
          std::to_string(witness.two_adic_defect()));
  note("chi4(y) = 3/2, not an algebraic integer, 2-adic defect 1");

  Certificate cert;
  cert.pipeline = "s8";
  cert.trail = {{"tau", algelt_to_json(AlgElt::of(tau))},
                {"psi", algelt_to_json(psi.value)},
                {"x", algelt_to_json(x)},
                {"x_squared", algelt_to_json(x2)},
                {"y", algelt_to_json(y)},
                {"witness", scalar_to_json(witness)}};
  cert.witness = witness;
  cert.defect = witness.two_adic_defect();
  result.certificate = std::move(cert);
  return result;
}

// ---------------------------------------------------------------------------

json certificate_to_json(const Certificate& cert) {
  json trail = json::array();
  for (const auto& [label, value] : cert.trail)
    trail.push_back({{"label", label}, {"value", value}});
  return {{"pipeline", cert.pipeline},
          {"trail", trail},
          {"witness", scalar_to_json(cert.witness)},
          {"witness_text", cert.witness.str()},
          {"two_adic_defect", cert.defect}};
}

json report_json(const std::vector<PipelineResult>& results) {
  json pipelines = json::array();
  for (const auto& r : results) {
    json entry = {{"pipeline", r.name},
                  {"identities", check_list_json(r.checks)},
                  {"passed", true}};
    if (r.certificate) entry["certificate"] = certificate_to_json(*r.certificate);
    if (!r.extra.is_null()) entry["extra"] = r.extra;
    pipelines.push_back(std::move(entry));
  }
  return {{"tool", "hopfcheck"}, {"pipelines", pipelines}};
}

namespace {

const json& trail_value(const json& cert, const std::string& label) {
  for (const auto& item : cert.at("trail"))
    if (item.at("label") == label) return item.at("value");
  throw std::invalid_argument("certificate trail is missing '" + label + "'");
}

}  // namespace

bool replay_certificate(const json& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    std::string pipeline = cert.at("pipeline").get<std::string>();
    Scalar witness = scalar_from_json(cert.at("witness"));
    int defect = cert.at("two_adic_defect").get<int>();

    if (pipeline == "a5") {
      BuiltinSetup setup = builtin_cocycle("a5-xi");
      TwistElt j = TwistElt::build(setup.ctx, setup.omega);
      AlgElt tau = algelt_from_json(trail_value(cert, "tau"));
      AlgElt mu = algelt_from_json(trail_value(cert, "mu"));
      if (mu != setup.ctx.idem[0].scaled(Scalar(4)) * tau * setup.ctx.idem[0])
        return fail("mu does not rebuild from tau");
      ClassFunction chi = ClassFunction::a5(1) + ClassFunction::a5(4) +
                          ClassFunction::a5(5).scaled(Scalar(2));
      AlgElt y = slice_left(chi, twisted_coproduct(j, mu));
      if (y != algelt_from_json(trail_value(cert, "y")))
        return fail("y does not rebuild from mu");
      if (apply_char(ClassFunction::a5(1), y) !=
          scalar_from_json(trail_value(cert, "chi1_of_y")))
        return fail("chi1(y) mismatch");
      AlgElt y2 = y * y;
      if (y2 != algelt_from_json(trail_value(cert, "y_squared")))
        return fail("y^2 does not rebuild from y");
      Scalar recomputed = apply_char(ClassFunction::a5(4), y2);
      if (recomputed != witness) return fail("witness does not reproduce");
      if (recomputed != scalar_from_json(trail_value(cert, "witness")))
        return fail("trail witness mismatch");
      if (witness.two_adic_defect() != defect) return fail("defect mismatch");
      return true;
    }

    if (pipeline == "s8") {
      BuiltinSetup setup = builtin_cocycle("s8-omega");
      TwistElt j = TwistElt::build(setup.ctx, setup.omega);
      AlgElt psi = algelt_from_json(trail_value(cert, "psi"));
      AlgElt x = slice_right(twisted_coproduct(j, psi), chi4_times_trivial());
      if (x != algelt_from_json(trail_value(cert, "x")))
        return fail("x does not rebuild from psi");
      AlgElt x2 = x * x;
      if (x2 != algelt_from_json(trail_value(cert, "x_squared")))
        return fail("x^2 does not rebuild");
      AlgElt half = x2;
      AlgElt chain = half + AlgElt::of(Perm::parse("(1 2)(3 4)", 8)) *
                                AlgElt::of(Perm::parse("(4 5)", 8)) * half *
                                AlgElt::of(Perm::parse("(4 5)", 8));
      AlgElt y = chain.conjugated_by(Perm::parse("(1 4 3)(5 2)", 8));
      if (y != algelt_from_json(trail_value(cert, "y"))) return fail("y does not rebuild");
      Scalar recomputed = apply_char(ClassFunction::s4(4), y.restricted(4));
      if (recomputed != witness) return fail("witness does not reproduce");
      if (witness.two_adic_defect() != defect) return fail("defect mismatch");
      return true;
    }
    return fail("unknown pipeline tag '" + pipeline + "'");
  } catch (const std::exception& e) {
    return fail(std::string("replay error: ") + e.what());
  }
}

}  // namespace tga

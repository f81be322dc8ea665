// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "tga/builtins.hpp"
#include "tga/coset.hpp"
#include "tga/lattice.hpp"
#include "tga/matrix.hpp"
#include "tga/pipeline.hpp"
#include "tga/serialize.hpp"

using namespace tga;

namespace {

struct Runner {
  int failures = 0;

  void run(int number, const std::string& title, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
      body();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cout << "[PASS] criterion " << number << ": " << title << " (" << ms
                << " ms)\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << number << ": " << title << "\n        "
                << e.what() << "\n";
    }
  }
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::mt19937_64 rng(0xacce97edULL);

Scalar rand_scalar() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  return Scalar(r(), r(), r(), r());
}

Perm rand_perm(int degree) {
  std::vector<int> img(degree);
  for (int k = 0; k < degree; ++k) img[k] = k + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

AlgElt rand_algelt(int degree, int terms) {
  AlgElt a(degree);
  for (int k = 0; k < terms; ++k) a.add_term(rand_perm(degree), rand_scalar());
  return a;
}

const Scalar& fourth(int e) { return fourth_root_value(e); }

AlgElt half_id_minus(int degree, const char* cycle) {
  AlgElt a(degree);
  a.add_term(Perm::identity(degree), Scalar(Rational(1, 2)));
  a.add_term(Perm::parse(cycle, degree), Scalar(Rational(-1, 2)));
  return a;
}

// ---------------------------------------------------------------------------
// criterion 4 helpers

void hopf_axioms_random(int cases) {
  for (int k = 0; k < cases; ++k) {
    AlgElt a = rand_algelt(5, 4);
    Tensor2 d = coproduct(a);
    auto delta = [](const Perm& g) { return coproduct(AlgElt::of(g)); };
    expect(expand_left_leg(d, delta) == expand_right_leg(d, delta),
           "coassociativity failed on a random element");
    expect(d.counit_left() == a && d.counit_right() == a, "counit law failed");
    AlgElt folded(5);
    for (const auto& [key, c] : d.terms())
      folded.add_term(key.first.inverse() * key.second, c);
    expect(folded == AlgElt::unit(5).scaled(a.counit()), "antipode law failed");
  }
}

void full_basis_twisted_laws(const std::string& name) {
  BuiltinSetup setup = builtin_cocycle(name);
  SubgroupTable g = group_from_spec(setup.group_spec);
  TwistElt j = TwistElt::build(setup.ctx, setup.omega);

  std::map<Perm, Tensor2> cache;
  for (const Perm& p : g.elements())
    cache.emplace(p, twisted_coproduct(j, AlgElt::of(p)));
  auto delta = [&](const Perm& p) -> const Tensor2& { return cache.at(p); };

  std::map<Perm, AlgElt> antipode_cache;
  for (const Perm& p : g.elements())
    antipode_cache.emplace(p, twisted_antipode(j, AlgElt::of(p)));

  for (const Perm& p : g.elements()) {
    const Tensor2& d = cache.at(p);
    expect(d.counit_left() == AlgElt::of(p) && d.counit_right() == AlgElt::of(p),
           "twisted counit law failed at " + p.str());
    expect(expand_left_leg(d, delta) == expand_right_leg(d, delta),
           "twisted coassociativity failed at " + p.str());
    AlgElt folded(g.degree());
    for (const auto& [key, c] : d.terms())
      folded += antipode_cache.at(key.first).scaled(c) * AlgElt::of(key.second);
    expect(folded == AlgElt::unit(g.degree()), "twisted antipode law failed at " + p.str());
  }
}

// Twisted-coproduct expansion of e_phi tau e_psi from the cocycle data.
Tensor2 coproduct_expansion(const CharContext& ctx, const Cocycle& omega,
                            const Perm& tau, uint32_t phi, uint32_t psi) {
  Tensor2 out(ctx.degree());
  AlgElt t = AlgElt::of(tau);
  for (uint32_t lam = 0; lam < omega.order(); ++lam)
    for (uint32_t rho = 0; rho < omega.order(); ++rho) {
      Scalar coeff = omega.value(lam, lam ^ phi) * omega.value_inverse(rho, rho ^ psi);
      out += Tensor2::pure(ctx.idem[lam] * t * ctx.idem[rho],
                           ctx.idem[lam ^ phi] * t * ctx.idem[rho ^ psi])
                 .scaled(coeff);
    }
  return out;
}

void s8_full_basis_laws() {
  for (const char* name : {"s8-omega", "s8-kappa"}) {
    BuiltinSetup setup = builtin_cocycle(name);
    TwistElt j = TwistElt::build(setup.ctx, setup.omega);
    expect(check_twist_axioms(j.value(), j.inverse()),
           std::string(name) + ": twist axioms failed");
  }

  BuiltinSetup setup = builtin_cocycle("s8-omega");
  TwistElt j = TwistElt::build(setup.ctx, setup.omega);
  SubgroupTable s8 = symmetric_group(8);
  SubgroupTable m_table = setup.ctx.m->table();

  // counit law, honestly per double-coset representative; the M-translation
  // lemma below carries it to every basis element of S8
  CosetDecomposition decomp = CosetDecomposition::make(s8, setup.ctx, setup.omega);
  std::set<std::vector<uint8_t>> block_structures;
  for (const CosetBlock& block : decomp.blocks()) {
    const Perm& rep = block.representative();
    Tensor2 d = twisted_coproduct(j, AlgElt::of(rep));
    expect(d.counit_left() == AlgElt::of(rep) && d.counit_right() == AlgElt::of(rep),
           "twisted counit law failed at representative " + rep.str());

    // block-level coassociativity: the cocycle identity of the block cocycle
    // over all |N|^3 triples, deduplicated across equal (N, c) structures
    const Cocycle& c = block.block_cocycle();
    std::vector<uint8_t> key;
    key.push_back(static_cast<uint8_t>(c.rank()));
    for (uint32_t a = 0; a < c.order(); ++a)
      for (uint32_t b = 0; b < c.order(); ++b)
        key.push_back(static_cast<uint8_t>(c.exponent(a, b)));
    if (block_structures.insert(std::move(key)).second)
      expect(c.identity_holds(), "block cocycle identity failed at " + rep.str());
  }

  // M-translation lemma on random samples
  std::uniform_int_distribution<size_t> gi(0, s8.order() - 1);
  std::uniform_int_distribution<uint32_t> mi(0, setup.ctx.m->order() - 1);
  for (int k = 0; k < 200; ++k) {
    Perm g = s8.elements()[gi(rng)];
    Perm m1 = setup.ctx.m->element(mi(rng));
    Perm m2 = setup.ctx.m->element(mi(rng));
    Tensor2 lhs = twisted_coproduct(j, AlgElt::of(m1 * g * m2));
    Tensor2 rhs = Tensor2::pure(AlgElt::of(m1), AlgElt::of(m1)) *
                  twisted_coproduct(j, AlgElt::of(g)) *
                  Tensor2::pure(AlgElt::of(m2), AlgElt::of(m2));
    expect(lhs == rhs, "M-translation of the twisted coproduct failed");
  }

  // exact bridge between the two descriptions: the idempotent-basis expansion
  // agrees with J Delta(.) J^-1 on sampled basis elements of the S4Q block
  SubgroupTable g4q(8, {Perm::parse("(1 2)", 8), Perm::parse("(1 2 3 4)", 8),
                        Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
  CosetDecomposition small = CosetDecomposition::make(g4q, setup.ctx, setup.omega);
  Perm tau = Perm::parse("(1 2 3)", 8);
  const CosetBlock& block = small.block_of(tau);
  std::uniform_int_distribution<size_t> pi(0, block.pairs().size() - 1);
  for (int k = 0; k < 6; ++k) {
    uint32_t packed = block.pairs()[pi(rng)];
    AlgElt b = block.basis_element_at(tau, packed);
    expect(twisted_coproduct(j, b) ==
               coproduct_expansion(setup.ctx, setup.omega, tau, packed >> 4,
                                   packed & 0xF),
           "idempotent-basis expansion mismatch on the S4Q block");
  }

  // twisted antipode law across the whole S4 Q subgroup of S8
  std::map<Perm, AlgElt> s_cache;
  for (const Perm& p : g4q.elements())
    s_cache.emplace(p, twisted_antipode(j, AlgElt::of(p)));
  for (const Perm& p : g4q.elements()) {
    Tensor2 d = twisted_coproduct(j, AlgElt::of(p));
    AlgElt folded(8);
    for (const auto& [key, c] : d.terms())
      folded += s_cache.at(key.first).scaled(c) * AlgElt::of(key.second);
    expect(folded == AlgElt::unit(8),
           "twisted antipode law failed in S4 Q at " + p.str());
  }
}

void idempotent_laws(const std::string& name) {
  BuiltinSetup setup = builtin_cocycle(name);
  const auto& idem = setup.ctx.idem;
  uint32_t n = setup.ctx.m->order();
  AlgElt sum(setup.ctx.degree());
  for (uint32_t a = 0; a < n; ++a) {
    sum += idem[a];
    for (uint32_t b = 0; b < n; ++b)
      expect(idem[a] * idem[b] == (a == b ? idem[a] : AlgElt(setup.ctx.degree())),
             name + ": orthogonality failed");
  }
  expect(sum == AlgElt::unit(setup.ctx.degree()), name + ": idempotents do not sum to 1");
  for (uint32_t mask = 0; mask < n; ++mask)
    for (uint32_t a = 0; a < n; ++a)
      expect(AlgElt::of(setup.ctx.m->element(mask)) * idem[a] ==
                 idem[a].scaled(setup.ctx.chars[a].value(setup.ctx.m->element(mask))),
             name + ": m e_phi != phi(m) e_phi");
}

void cocycle_identity_suite() {
  for (const auto& name : builtin_cocycle_names())
    expect(builtin_cocycle(name).omega.identity_holds(),
           name + ": cocycle identity failed");
  std::uniform_int_distribution<int> e(0, 3);
  for (int k = 0; k < 200; ++k) {
    std::vector<Scalar> q(16, Scalar(1));
    for (size_t i = 1; i < q.size(); ++i) q[i] = fourth(e(rng));
    Cocycle dq = coboundary(4, q);
    expect(dq.identity_holds(), "coboundary cocycle identity failed");
    expect(builtin_cocycle("s8-omega").omega.multiplied(dq).identity_holds(),
           "product cocycle identity failed");
  }
}

// ---------------------------------------------------------------------------
// criterion 5 helper

void oracle_equivalence(const std::string& name) {
  BuiltinSetup setup = builtin_cocycle(name);
  SubgroupTable g = group_from_spec(setup.group_spec);
  CosetDecomposition decomp = CosetDecomposition::make(g, setup.ctx, setup.omega);
  const TwistElt& j = decomp.twist();

  size_t total = 0;
  for (const CosetBlock& b : decomp.blocks()) total += b.dimension();
  expect(total == g.order(), name + ": block dimensions do not sum to |G|");

  // brute force: Delta_J of every group element stays inside its block
  std::map<Perm, size_t> block_index;
  for (size_t k = 0; k < decomp.blocks().size(); ++k)
    for (const Perm& p : decomp.blocks()[k].coset()) block_index.emplace(p, k);
  for (const Perm& p : g.elements()) {
    size_t home = block_index.at(p);
    Tensor2 d = twisted_coproduct(j, AlgElt::of(p));
    for (const auto& [key, coeff] : d.terms())
      expect(block_index.at(key.first) == home && block_index.at(key.second) == home,
             name + ": coproduct of " + p.str() + " leaves its block");
  }

  // pairing identity <u1 u2, b> = <u1 (x) u2, Delta_J(b)> on every basis pair
  for (const CosetBlock& block : decomp.blocks()) {
    const auto& pairs = block.pairs();
    size_t n = pairs.size();
    const auto& coset = block.coset();

    ScalarMatrix basis_matrix(coset.size(), n);
    for (size_t col = 0; col < n; ++col) {
      const AlgElt& b = block.basis_element(pairs[col]);
      for (const auto& [perm, coeff] : b.terms()) {
        size_t row =
            std::lower_bound(coset.begin(), coset.end(), perm) - coset.begin();
        basis_matrix.at(row, col) = coeff;
      }
    }
    auto inverse = basis_matrix.inverse();
    expect(inverse.has_value(), name + ": block basis is not invertible");

    std::map<Perm, size_t> coset_index;
    for (size_t k = 0; k < coset.size(); ++k) coset_index.emplace(coset[k], k);
    std::map<uint32_t, size_t> pair_index;
    for (size_t k = 0; k < n; ++k) pair_index.emplace(pairs[k], k);

    for (size_t mu = 0; mu < n; ++mu) {
      Tensor2 d = twisted_coproduct(j, block.basis_element(pairs[mu]));
      ScalarMatrix coords(n, n);
      for (const auto& [key, coeff] : d.terms()) {
        size_t r1 = coset_index.at(key.first), r2 = coset_index.at(key.second);
        for (size_t i = 0; i < n; ++i) {
          const Scalar& ci = inverse->at(i, r1);
          if (ci.is_zero()) continue;
          for (size_t k = 0; k < n; ++k) {
            const Scalar& ck = inverse->at(k, r2);
            if (ck.is_zero()) continue;
            coords.at(i, k) += coeff * ci * ck;
          }
        }
      }
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
          Scalar expected;
          if ((pairs[i] ^ pairs[k]) == pairs[mu])
            expected = block_dual_product(block, pairs[i], pairs[k]).first;
          expect(coords.at(i, k) == expected,
                 name + ": pairing identity failed in block " +
                     block.representative().str());
        }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

int main() {
  Runner runner;

  runner.run(1, "A5 pipeline reproduces the printed chain and chi4(y^2) = 27/4", [] {
    PipelineResult r = pipeline_a5();  // every step is pinned inside
    expect(r.certificate.has_value(), "missing certificate");
    expect(r.certificate->witness == Scalar(Rational(27, 4)), "wrong witness");
    AlgElt y = algelt_from_json(r.certificate->trail[2].second);
    AlgElt expected_y(5);
    for (const char* c : {"(1 5)(2 4)", "(2 4)(3 5)", "(1 3)(4 5)", "(1 3)(2 5)"})
      expected_y.add_term(Perm::parse(c, 5), Scalar(Rational(3, 4)));
    expect(y == expected_y, "certificate trail y differs from the printed form");
  });

  runner.run(2, "S4 pipeline: J, T, r, closure under both structures, J outside XxX",
             [] {
               PipelineResult r = pipeline_s4();
               expect(r.extra["closure_untwisted"]["unit"] == true, "closure missing");
               BuiltinSetup s = builtin_cocycle("s4-omega");
               TwistElt j = TwistElt::build(s.ctx, s.omega);
               AlgElt plus(4), minus(4);
               plus.add_term(Perm::identity(4), Scalar(Rational(1, 2)));
               plus.add_term(Perm::parse("(1 2)", 4), Scalar(Rational(1, 2)));
               minus.add_term(Perm::identity(4), Scalar(Rational(1, 2)));
               minus.add_term(Perm::parse("(1 2)", 4), Scalar(Rational(-1, 2)));
               Tensor2 expected = Tensor2::pure(plus, AlgElt::unit(4)) +
                                  Tensor2::pure(minus, AlgElt::of(Perm::parse("(3 4)", 4)));
               expect(j.value() == expected, "J differs from the printed form");
             });

  runner.run(3, "S8 pipeline: N, Z, Psi, x^2, ell, T expansion and chi4(y) = 3/2", [] {
    PipelineResult r = pipeline_s8();
    expect(r.certificate.has_value(), "missing certificate");
    expect(r.certificate->witness == Scalar(Rational(3, 2)), "wrong witness");
    expect(algelt_from_json(r.certificate->trail[4].second) ==
               half_id_minus(8, "(1 2 3)"),
           "certificate y differs from (id - (1 2 3))/2");
  });

  runner.run(4, "property suite: Hopf/twist axioms, full-basis twisted laws, "
                "idempotent laws, cocycle identities", [] {
    hopf_axioms_random(200);
    for (const auto& name : builtin_cocycle_names()) {
      BuiltinSetup setup = builtin_cocycle(name);
      TwistElt j = TwistElt::build(setup.ctx, setup.omega);
      expect(check_twist_axioms(j.value(), j.inverse()), name + ": twist axioms");
    }
    for (const char* name : {"a5-xi", "a5-rational", "s4-omega", "s4-kappa"})
      full_basis_twisted_laws(name);
    s8_full_basis_laws();
    for (const auto& name : builtin_cocycle_names()) idempotent_laws(name);
    cocycle_identity_suite();
  });

  runner.run(5, "decomposition oracle equivalence for S4 and A5", [] {
    for (const char* name : {"a5-xi", "a5-rational", "s4-omega", "s4-kappa"})
      oracle_equivalence(name);
  });

  runner.run(6, "radical and Wedderburn profiles", [] {
    BuiltinSetup a5 = builtin_cocycle("a5-xi");
    expect(a5.omega.nondegenerate(), "a5 omega is not nondegenerate");
    expect(a5.omega.radical() == std::vector<uint32_t>{0}, "a5 radical is not trivial");

    BuiltinSetup s8 = builtin_cocycle("s8-omega");
    SubgroupTable g4q(8, {Perm::parse("(1 2)", 8), Perm::parse("(1 2 3 4)", 8),
                          Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
    CosetDecomposition decomp = CosetDecomposition::make(g4q, s8.ctx, s8.omega);
    auto w = decomp.block_of(Perm::parse("(1 2 3)", 8)).block_cocycle()
                 .wedderburn_profile();
    expect(w.block_count == 4, "S8 block radical size is not 4");
    expect(w.irrep_dim == 4 && w.consistent, "S8 block irreducible dimension is not 4");
  });

  runner.run(7, "cohomologous transports for the three printed (q, omega, omega') "
                "triples, 20 samples each", [] {
    const Scalar one(1), xi = Scalar::i();
    auto samples = [](int degree) {
      std::vector<AlgElt> out;
      for (int k = 0; k < 20; ++k) out.push_back(rand_algelt(degree, 3));
      return out;
    };

    BuiltinSetup a5x = builtin_cocycle("a5-xi"), a5r = builtin_cocycle("a5-rational");
    expect(a5r.omega.multiplied(coboundary(2, {one, one, one, xi})) == a5x.omega,
           "a5: omega != omega' dq");
    TwistElt jx = TwistElt::build(a5x.ctx, a5x.omega);
    TwistElt jr = TwistElt::build(a5r.ctx, a5r.omega);
    auto s5 = samples(5);
    expect(transport_check(jr, jx, cohomologous_v(a5x.ctx, {one, one, one, xi}), s5),
           "a5 transport failed");

    BuiltinSetup s4o = builtin_cocycle("s4-omega"), s4k = builtin_cocycle("s4-kappa");
    expect(s4k.omega.multiplied(coboundary(2, {one, xi, -one, xi})) == s4o.omega,
           "s4: omega != kappa dq");
    TwistElt j4 = TwistElt::build(s4o.ctx, s4o.omega);
    TwistElt t4 = TwistElt::build(s4k.ctx, s4k.omega);
    auto s4s = samples(4);
    expect(transport_check(t4, j4, cohomologous_v(s4o.ctx, {one, xi, -one, xi}), s4s),
           "s4 transport failed");

    BuiltinSetup s8o = builtin_cocycle("s8-omega"), s8k = builtin_cocycle("s8-kappa");
    std::vector<Scalar> q8(16, one);
    for (uint32_t a = 0; a < 16; ++a)
      if ((a & 1) && (a & 4)) q8[a] = -one;
    expect(s8o.omega.multiplied(coboundary(4, q8)) == s8k.omega, "s8: kappa != omega dq");
    TwistElt j8 = TwistElt::build(s8o.ctx, s8o.omega);
    TwistElt t8 = TwistElt::build(s8k.ctx, s8k.omega);
    auto s8s = samples(8);
    expect(transport_check(j8, t8, cohomologous_v(s8o.ctx, q8), s8s),
           "s8 transport failed");
  });

  runner.run(8, "group-likes of the twisted A5 algebra are exactly A4; the S8 "
                "scan finishes inside its budget", [] {
    BuiltinSetup setup = builtin_cocycle("a5-xi");
    auto likes = group_like_blocks(alternating_group(5), setup.ctx, setup.omega);
    SubgroupTable a4(5, {Perm::parse("(1 2 3)", 5), Perm::parse("(1 2)(3 4)", 5)});
    expect(likes == a4.elements(), "group-like set differs from A4");

    auto start = std::chrono::steady_clock::now();
    BuiltinSetup s8 = builtin_cocycle("s8-omega");
    auto s8_likes = group_like_blocks(symmetric_group(8), s8.ctx, s8.omega);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    expect(s8_likes == s8.ctx.m->table().elements(),
           "S8 group-like set differs from M");
    expect(secs < 60, "S8 group-like scan exceeded 60 s");
  });

  runner.run(9, "obstruction certificates: non-integral witnesses with defects 2 and 1, "
                "bit-exact replay", [] {
    PipelineResult a5 = pipeline_a5();
    PipelineResult s8 = pipeline_s8();
    for (const auto* r : {&a5, &s8}) {
      const Certificate& cert = *r->certificate;
      expect(!cert.witness.is_algebraic_integer(), "witness is an algebraic integer");
      expect(cert.defect == (cert.pipeline == "a5" ? 2 : 1), "wrong defect");
      nlohmann::json roundtrip =
          nlohmann::json::parse(certificate_to_json(cert).dump());
      std::string why;
      expect(replay_certificate(roundtrip, &why), cert.pipeline + " replay: " + why);
      expect(scalar_from_json(roundtrip["witness"]) == cert.witness,
             "witness not bit-exact after the round trip");
    }
  });

  if (runner.failures == 0) std::cout << "acceptance: all criteria passed\n";
  else std::cout << "acceptance: " << runner.failures << " criteria FAILED\n";
  return runner.failures;
}

#include <catch_amalgamated.hpp>

#include <set>

#include "polysub/charging.hpp"
#include "polysub/perturb.hpp"
#include "test_util.hpp"

using namespace polysub;
using namespace polysub::testutil;

namespace {
RVec pt(long x, long y) { return {Rational(x), Rational(y)}; }
}  // namespace

TEST_CASE("generic direction search on the square") {
  // omega = (1, t): t = 1 ties the corners (+1,-1) and (-1,+1); t = 1/2 works.
  VerticalDirection vd = pick_generic_direction(unit_square());
  CHECK(vd.t == Rational(1, 2));
  CHECK(vd.omega == RVec{Rational(1), Rational(1, 2)});
}

TEST_CASE("edges at vertices") {
  Scene sq = unit_square();
  auto e = vertex_edges(sq, pt(1, 1));
  REQUIRE(e.size() == 2);
  // Edge leaving x <= 1 runs along -x; edge leaving y <= 1 runs along -y.
  CHECK(e[0].first == 0);
  CHECK(e[0].second == RVec{Rational(-1), Rational(0)});
  CHECK(e[1].first == 2);
  CHECK(e[1].second == RVec{Rational(0), Rational(-1)});

  // Crossing (2,1) of the two squares: P = [1,2]x[1,2], edges (-1,0), (0,1).
  Scene two = two_squares();
  auto e2 = vertex_edges(two, pt(2, 1));
  REQUIRE(e2.size() == 2);
  std::set<std::string> dirs;
  for (auto& [h, u] : e2) dirs.insert(format_vec(u));
  CHECK(dirs == std::set<std::string>{"-1 0", "0 1"});

  // A wedge: two crossing lines of distinct colors.
  Scene wedge;
  wedge.dim = 2;
  wedge.num_colors = 2;
  wedge.halfspaces.push_back(hs({1, 0}, 0, 1, 0));
  wedge.halfspaces.push_back(hs({0, 1}, 0, 1, 1));
  auto e3 = vertex_edges(wedge, pt(0, 0));
  CHECK(e3.size() == 2);
}

TEST_CASE("edge errors") {
  CHECK_THROWS_AS(vertex_edges(concurrent_lines(), pt(0, 0)), NotSimple);
  // (0,1) lies on two hyperplanes of the two-squares scene but is interior
  // to an edge of the subdivision, not a vertex.
  CHECK_THROWS_AS(vertex_edges(two_squares(), pt(0, 1)), NotAVertex);
}

TEST_CASE("charges on the unit square") {
  Scene sq = unit_square();
  RVec omega{Rational(1, 2), Rational(1)};

  Charge bottom = charge_vertex(sq, pt(-1, -1), omega);
  CHECK(bottom.up);
  CHECK(bottom.i == 2);
  CHECK(bottom.hprime.empty());
  CHECK(bottom.colorset == std::vector<int>{0});

  Charge right = charge_vertex(sq, pt(1, -1), omega);
  CHECK(right.up);  // tie resolves to up
  CHECK(right.i == 1);
  CHECK(right.hprime.size() == 1);

  Charge top = charge_vertex(sq, pt(1, 1), omega);
  CHECK(!top.up);
  CHECK(top.i == 2);

  for (auto v : {pt(-1, -1), pt(1, -1), pt(-1, 1), pt(1, 1)}) {
    ChargeCheck cc = verify_charge(sq, charge_vertex(sq, v, omega), omega);
    INFO(format_vec(v));
    CHECK(cc.ok);
  }
}

TEST_CASE("wedge charge includes both colors") {
  Scene wedge;  // y >= x and y >= -x: opens upward from the origin
  wedge.dim = 2;
  wedge.num_colors = 2;
  wedge.halfspaces.push_back(hs({1, -1}, 0, 1, 0));
  wedge.halfspaces.push_back(hs({-1, -1}, 0, 1, 1));
  RVec omega{Rational(1, 3), Rational(1)};
  Charge c = charge_vertex(wedge, pt(0, 0), omega);
  CHECK(c.up);
  CHECK(c.i == 2);
  CHECK(c.colorset == std::vector<int>{0, 1});
  CHECK(verify_charge(wedge, c, omega).ok);
}

TEST_CASE("orthogonal directions are rejected") {
  Scene sq = unit_square();
  CHECK_THROWS_AS(charge_vertex(sq, pt(1, 1), RVec{Rational(1), Rational(0)}), OrthogonalEdge);
}

TEST_CASE("charge map is injective on corpus scenes") {
  for (const Scene& s : {unit_square(), two_squares(), moment_scene(5, 2), moment_scene(4, 3)}) {
    ChargingReport rep = verify_injection(s);
    CHECK(rep.injective);
    CHECK(rep.per_vertex_ok);
    CHECK(rep.bound_ok);
    CHECK(rep.issues.empty());
  }
}

TEST_CASE("charging the extremal families") {
  auto [s223, p223] = gen_extremal(make_family_params(2, 2, 3));
  (void)p223;
  ChargingReport r223 = verify_injection(s223);
  CHECK(r223.vertices == 12);
  CHECK(r223.ok());
  CHECK(r223.bound == 44);

  auto [s323, p323] = gen_extremal(make_family_params(3, 2, 3));
  (void)p323;
  ChargingReport r323 = verify_injection(s323);
  CHECK(r323.vertices == 24);
  CHECK(r323.ok());
}

TEST_CASE("per-class tallies respect their caps") {
  ChargingReport rep = verify_injection(unit_square());
  REQUIRE(!rep.per_class.empty());
  long long total = 0;
  for (const auto& cl : rep.per_class) {
    CHECK(cl.count <= cl.cap);
    CHECK(cl.i >= 1);  // ceil(d/2) for d = 2
    total += cl.count;
  }
  CHECK(total == rep.vertices);
}

TEST_CASE("charges are invariant under positive halfspace rescaling") {
  Scene a = two_squares();
  Scene b = a;
  for (std::size_t i = 0; i < b.halfspaces.size(); i += 2) {
    for (auto& x : b.halfspaces[i].normal) x *= Rational(3 + static_cast<int>(i), 2);
    b.halfspaces[i].offset *= Rational(3 + static_cast<int>(i), 2);
  }
  VerticalDirection vd = pick_generic_direction(a);
  auto va = vertices_bruteforce(a), vb = vertices_bruteforce(b);
  REQUIRE(va.size() == vb.size());
  for (std::size_t i = 0; i < va.size(); ++i) {
    Charge ca = charge_vertex(a, va[i], vd.omega);
    Charge cb = charge_vertex(b, vb[i], vd.omega);
    CHECK(ca.up == cb.up);
    CHECK(ca.i == cb.i);
    CHECK(ca.hprime == cb.hprime);
    CHECK(ca.colorset == cb.colorset);
  }
}

TEST_CASE("charging perturbed scenes from the degeneracy corpus") {
  for (auto& [name, s] : degeneracy_corpus()) {
    if (s.dim > 2) continue;  // keep the suite quick; d=3 cases run in acceptance
    INFO(name);
    auto [pert, steps] = perturb_scene(s);
    (void)steps;
    ChargingReport rep = verify_injection(pert);
    CHECK(rep.ok());
  }
}

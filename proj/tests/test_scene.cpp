#include <catch_amalgamated.hpp>

#include <random>

#include "polysub/scene.hpp"
#include "polysub/scene_io.hpp"
#include "polysub/subdivision.hpp"
#include "test_util.hpp"

using namespace polysub;
using namespace polysub::testutil;

TEST_CASE("classify on the unit square") {
  Scene s = unit_square();  // order: x<=1, -x<=1, y<=1, -y<=1
  CHECK(classify(s, {Rational(0), Rational(0)}) == "++++");
  CHECK(classify(s, {Rational(1), Rational(0)}) == "0+++");
  CHECK(classify(s, {Rational(2), Rational(0)}) == "-+++");
}

TEST_CASE("color membership") {
  Scene s = unit_square();
  CHECK(color_membership(s, {Rational(0), Rational(0)}, 0).kind == MembershipKind::Interior);
  auto b = color_membership(s, {Rational(1), Rational(1)}, 0);
  CHECK(b.kind == MembershipKind::Boundary);
  CHECK(b.tight == std::vector<int>{0, 2});  // x<=1 and y<=1
  CHECK(color_membership(s, {Rational(3), Rational(0)}, 0).kind == MembershipKind::Outside);

  Scene empty_color = s;
  empty_color.num_colors = 2;
  CHECK(color_membership(empty_color, {Rational(9), Rational(9)}, 1).kind ==
        MembershipKind::Interior);
}

TEST_CASE("membership agrees with classify") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coord(-4, 4);
  Scene s = two_squares();
  for (int t = 0; t < 200; ++t) {
    RVec p{Rational(coord(rng), 1 + t % 2), Rational(coord(rng), 1 + t % 3)};
    SignVector sig = classify(s, p);
    for (int c = 0; c < s.num_colors; ++c) {
      Membership m = color_membership(s, p, c);
      bool any_neg = false;
      std::vector<int> zeros;
      for (std::size_t i = 0; i < s.halfspaces.size(); ++i) {
        if (s.halfspaces[i].color != c) continue;
        if (sig[i] == '-') any_neg = true;
        if (sig[i] == '0') zeros.push_back(static_cast<int>(i));
      }
      if (any_neg) {
        CHECK(m.kind == MembershipKind::Outside);
      } else if (zeros.empty()) {
        CHECK(m.kind == MembershipKind::Interior);
      } else {
        CHECK(m.kind == MembershipKind::Boundary);
        CHECK(m.tight == zeros);
      }
    }
  }
}

TEST_CASE("bounding simplex for the unit square") {
  Scene s = add_bounding_simplex(unit_square());
  REQUIRE(s.delta_color);
  CHECK(s.num_colors == 2);
  CHECK(s.halfspaces.size() == 9);
  CHECK(s.facet_count() == 4);
  CHECK(s.color_count() == 1);
  // R = 1 + max |corner coordinate| = 2; walls at -x_i <= 4 and x+y <= 8.
  CHECK(s.halfspaces[4].offset == 4);
  CHECK(s.halfspaces[8].offset == 8);
  for (const RVec& p : candidate_vertices(unit_square())) {
    SignVector sig = classify(s, p);
    for (std::size_t i = 4; i < 9; ++i) CHECK(sig[i] == '+');
  }
  CHECK_THROWS_AS(add_bounding_simplex(s), std::invalid_argument);
}

TEST_CASE("bounding simplex degenerate inputs") {
  Scene empty;
  empty.dim = 1;
  empty.num_colors = 1;
  Scene e = add_bounding_simplex(empty);
  CHECK(e.halfspaces.size() == 2);  // interval [-1, 1] scaled by R = 1
  CHECK(e.halfspaces[0].offset == 1);

  Scene one;
  one.dim = 1;
  one.num_colors = 1;
  one.halfspaces.push_back(hs({1}, 0));
  Scene o = add_bounding_simplex(one);
  CHECK(o.halfspaces[1].offset == 1);  // candidate {0} gives R = 1
}

TEST_CASE("bounding simplex reaches distant hyperplanes") {
  Scene far;
  far.dim = 2;
  far.num_colors = 1;
  far.halfspaces.push_back(hs({1, 0}, 5));  // x <= 5, no candidate vertices at all
  Scene f = add_bounding_simplex(far);
  // The wall offsets scale with the hyperplane's distance from the origin,
  // so the simplex intersects it.
  CHECK(f.halfspaces[1].offset == 12);  // d * R with R = 6
  Census c = census(f);
  CHECK(c.counts[1] > 0);  // the line shows up inside the simplex
}

TEST_CASE("scene file round trip") {
  std::string text = "dim 1\ncolors 1\nh 0 1 1\nh 0 -1 1\n";
  Scene s = read_scene(text);
  CHECK(s.dim == 1);
  CHECK(s.halfspaces.size() == 2);
  CHECK(write_scene(s) == text);

  Scene sq = add_bounding_simplex(two_squares());
  Scene rt = read_scene(write_scene(sq));
  CHECK(write_scene(rt) == write_scene(sq));
  REQUIRE(rt.delta_color);
  CHECK(*rt.delta_color == *sq.delta_color);
}

TEST_CASE("scene file comments and errors") {
  CHECK(read_scene("# c\ndim 2\ncolors 1\n\nh 0 1 0 1 # trailing\n").halfspaces.size() == 1);

  auto line_of = [](const std::string& text) {
    try {
      read_scene(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("dim 2\ncolors 2\nh 5 1 0 3\n") == 3);   // color out of range
  CHECK(line_of("dim 2\ncolors 1\nh 0 1 1\n") == 3);      // wrong arity
  CHECK(line_of("dim 2\ncolors 1\nh 0 1 x 1\n") == 3);    // bad rational
  CHECK(line_of("dim 2\ncolors 1\nh 0 0 0 1\n") == 3);    // zero normal
  CHECK(line_of("dim 2\ncolors 1\nbogus\n") == 3);
  CHECK(line_of("colors 1\n") == 1);
  CHECK(line_of("dim 2\ncolors 2\ndelta 1\nh 0 1 0 1\n") > 0);  // delta needs d+1 rows
}

TEST_CASE("H-format export") {
  Scene iv = interval_scene(1);
  CHECK(export_hrep(iv, 0) == "H-representation\nbegin\n2 2 rational\n1 -1\n1 1\nend\n");

  Scene sq = unit_square();
  std::string h = export_hrep(sq, 0);
  CHECK(h.find("4 3 rational") != std::string::npos);

  Scene sq2 = sq;
  sq2.num_colors = 2;
  CHECK(export_hrep(sq2, 1) == "H-representation\nbegin\n0 3 rational\nend\n");
  CHECK_THROWS_AS(export_hrep(sq, 7), std::invalid_argument);
}

TEST_CASE("hyperplane classes group both orientations") {
  Scene s;
  s.dim = 2;
  s.num_colors = 2;
  s.halfspaces.push_back(hs({1, 0}, 1, 1, 0));    // x <= 1
  s.halfspaces.push_back(hs({-2, 0}, -2, 1, 1));  // x >= 1, scaled
  s.halfspaces.push_back(hs({2, 0}, 2, 1, 1));    // x <= 1, scaled
  HyperplaneClasses hc = hyperplane_classes(s);
  CHECK(hc.normal.size() == 1);
  CHECK(hc.class_of == std::vector<int>{0, 0, 0});
  CHECK(hc.orient_of[0] * hc.orient_of[1] == -1);
  CHECK(hc.orient_of[0] * hc.orient_of[2] == 1);
}

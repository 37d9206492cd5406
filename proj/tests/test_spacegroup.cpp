#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "abf/fixtures.hpp"
#include "abf/spacegroup.hpp"

using namespace abf;

namespace {

GroupElement elem(int rot, int a, int b, int c) {
  GroupElement e;
  e.rot = uint8_t(rot);
  e.trans = {uint8_t(a), uint8_t(b), uint8_t(c)};
  return e;
}

GroupElement elem_lbl(const std::string& lbl, int a, int b, int c) {
  return elem(PointGroup::octahedral().index_of(lbl), a, b, c);
}

struct Lcg {
  uint64_t s = 12345;
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
  GroupElement element() { return GroupElement::unpack(int(next() % 1536)); }
};

}  // namespace

TEST_CASE("composition law") {
  // pure translation addition mod 1
  auto a = elem_lbl("1_1", 3, 0, 0);
  auto sq = sg_compose(a, a);
  CHECK(sq == elem_lbl("1_1", 2, 0, 0));

  // T-type element cubes to identity when translations cancel
  auto t = elem_lbl("2_8", 0, 0, 0);
  CHECK(sg_compose(sg_compose(t, t), t).is_identity());

  Lcg rng;
  for (int i = 0; i < 20; ++i) {
    auto g = rng.element();
    CHECK(sg_compose(g, sg_inverse(g)).is_identity());
    CHECK(sg_compose(sg_inverse(g), g).is_identity());
  }
  // associativity on random triples
  for (int i = 0; i < 1000; ++i) {
    auto x = rng.element(), y = rng.element(), z = rng.element();
    CHECK(sg_compose(sg_compose(x, y), z) == sg_compose(x, sg_compose(y, z)));
  }
}

TEST_CASE("action on the torus") {
  std::array<double, 3> x{0.3, 0.1, 0.9};
  auto id = GroupElement{};
  auto y = sg_act(id, x);
  CHECK(y[0] == doctest::Approx(0.3));
  CHECK(y[1] == doctest::Approx(0.1));
  CHECK(y[2] == doctest::Approx(0.9));

  auto shift = elem_lbl("1_1", 1, 0, 0);
  auto z = sg_act(shift, {0, 0, 0});
  CHECK(z[0] == doctest::Approx(0.25));
  CHECK(z[1] == doctest::Approx(0.0));

  // 4_6 acts as (x,y,z) -> (y,x,-z)
  auto s = elem_lbl("4_6", 0, 0, 0);
  auto w = sg_act(s, {0.2, 0.5, 0.7});
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(w[1] == doctest::Approx(0.2));
  CHECK(w[2] == doctest::Approx(-0.7));
  auto ww = sg_act(s, {0.2, 0.5, 0.7}, /*wrap=*/true);
  CHECK(ww[2] == doctest::Approx(0.3));
}

TEST_CASE("universal group structure") {
  FiniteGroup g = FiniteGroup::universal();
  CHECK(g.order() == 1536);
  CHECK(g.num_classes() == 37);

  std::multiset<int> sizes(g.class_sizes().begin(), g.class_sizes().end());
  std::multiset<int> want{1, 1, 3, 3, 6, 6, 8, 12, 12, 12, 12, 12, 12, 12,
                          24, 24, 24, 24, 48, 48, 48, 48, 48, 48, 48, 48, 48,
                          48, 48, 48, 48, 96, 96, 128, 128, 128, 128};
  CHECK(sizes == want);

  int total = 0;
  for (int s : g.class_sizes()) total += s;
  CHECK(total == 1536);

  // conjugation preserves classes
  Lcg rng;
  for (int t = 0; t < 50; ++t) {
    auto h = rng.element();
    auto x = rng.element();
    auto y = sg_compose(sg_compose(h, x), sg_inverse(h));
    CHECK(g.class_of_elem(y) == g.class_of_elem(x));
  }
}

TEST_CASE("universal group classes match the reference partition") {
  FiniteGroup g = FiniteGroup::universal();
  auto fix = load_reference("group_G1536.json");
  auto fc = fix["classes"];
  REQUIRE(fc.size() == 37);
  for (size_t c = 0; c < fc.size(); ++c) {
    REQUIRE(fc[c].size() == size_t(g.class_sizes()[c]));
    for (size_t m = 0; m < fc[c].size(); ++m) {
      auto e = elem(fc[c][m][0].get<int>(), fc[c][m][1].get<int>(), fc[c][m][2].get<int>(),
                    fc[c][m][3].get<int>());
      CHECK(g.element(g.classes()[c][m]) == e);
    }
  }
}

TEST_CASE("subgroup generation") {
  // trivial group
  FiniteGroup t = FiniteGroup::from_generators({GroupElement{}});
  CHECK(t.order() == 1);

  // the generator pair printed for GP24: {2_8,(2,2,2)}, {3_3,(2,0,0)}
  FiniteGroup gp = FiniteGroup::from_generators(
      {elem_lbl("2_8", 2, 2, 2), elem_lbl("3_3", 2, 0, 0)}, "GP24");
  CHECK(gp.order() == 24);
  CHECK(gp.num_classes() == 8);
  std::multiset<int> sizes(gp.class_sizes().begin(), gp.class_sizes().end());
  CHECK(sizes == std::multiset<int>{1, 1, 3, 3, 4, 4, 4, 4});

  // quarter translations generate the abelian order-64 subgroup
  FiniteGroup tr = FiniteGroup::from_generators(
      {elem_lbl("1_1", 1, 0, 0), elem_lbl("1_1", 0, 1, 0), elem_lbl("1_1", 0, 0, 1)});
  CHECK(tr.order() == 64);
  CHECK(tr.num_classes() == 64);  // abelian
}

TEST_CASE("named subgroups validate against the catalog") {
  for (const auto& name : named_subgroup_names()) {
    FiniteGroup g = named_subgroup(name);
    CHECK(g.order() == subgroup_record(name).expected_order);
  }
}

TEST_CASE("named subgroup spot checks") {
  CHECK(named_subgroup("G768").num_classes() == 32);
  auto gs24 = named_subgroup("GS24");
  CHECK(gs24.order() == 24);
  CHECK(gs24.num_classes() == 5);
  std::multiset<int> sizes(gs24.class_sizes().begin(), gs24.class_sizes().end());
  CHECK(sizes == std::multiset<int>{1, 8, 3, 6, 6});
  CHECK(named_subgroup("GK32").num_classes() == 14);
}

TEST_CASE("normal chain") {
  FiniteGroup g1536 = FiniteGroup::universal();
  auto names = normal_chain_names();
  REQUIRE(names == std::vector<std::string>{"G64", "G128", "G256", "G768"});
  FiniteGroup prev = named_subgroup("G64");
  std::vector<int> indices;
  for (size_t i = 1; i < names.size(); ++i) {
    FiniteGroup next = named_subgroup(names[i]);
    CHECK(prev.is_normal_in(next));
    indices.push_back(next.order() / prev.order());
    prev = std::move(next);
  }
  CHECK(prev.is_normal_in(g1536));
  indices.push_back(g1536.order() / prev.order());
  CHECK(indices == std::vector<int>{2, 2, 3, 2});
}

TEST_CASE("class membership spot checks against reference listings") {
  // three representatives per class must land in the same computed class
  for (const std::string name : {"G768", "GF192", "GS32", "GP24"}) {
    FiniteGroup g = named_subgroup(name);
    auto fix = load_reference("group_" + name + ".json");
    for (const auto& cl : fix["classes"]) {
      int expect = -1;
      size_t count = 0;
      for (const auto& m : cl) {
        if (count++ >= 3) break;
        auto e = elem(m[0].get<int>(), m[1].get<int>(), m[2].get<int>(), m[3].get<int>());
        int c = g.class_of_elem(e);
        if (expect < 0) expect = c;
        CHECK(c == expect);
      }
    }
  }
}

TEST_CASE("frobenius congruences") {
  using R = Rational;
  // gauge-fixed admissible deformation
  CHECK(check_frobenius({R(0), R(1, 4), R(3, 4)}, {R(0), R(0), R(0)}, true));
  // 4*(1/3) not integral
  CHECK_FALSE(check_frobenius({R(0), R(1, 3), R(0)}, {R(0), R(0), R(0)}, true));
  // the undeformed point group passes both forms
  CHECK(check_frobenius({R(0), R(0), R(0)}, {R(0), R(0), R(0)}, false));
  CHECK(check_frobenius({R(0), R(0), R(0)}, {R(0), R(0), R(0)}, true));
  // full form examples
  CHECK(check_frobenius({R(1, 4), R(1, 4), R(1, 2)}, {R(1, 4), R(0), R(3, 4)}, false));
  CHECK_FALSE(check_frobenius({R(1, 4), R(1, 4), R(1, 4)}, {R(0), R(0), R(0)}, false));
}

TEST_CASE("element string form") {
  CHECK(elem_lbl("2_8", 1, 0, 3).to_string() == "{2_8,1/4,0,3/4}");
}

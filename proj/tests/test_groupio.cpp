#include <doctest.h>

#include "fixerlab/fixer.hpp"
#include "fixerlab/groupio.hpp"
#include "fixerlab/sporadic.hpp"

using namespace fixerlab;

TEST_CASE("groupio: parse images and cycles") {
  auto f = parse_group_file("degree 3\n2 1 3\n2 3 1\n");
  CHECK(f.degree == 3);
  REQUIRE(f.gens.size() == 2);
  CHECK(f.gens[0] == Perm::from_cycles(3, {{0, 1}}));
  CHECK(closure_order(f) == 6);

  auto c = parse_group_file("# S4\n  degree 4 \nname S4\norder 24\nformat cycles\n(1,2)\n(1, 2,3,4)\n()\n");
  CHECK(c.name == "S4");
  CHECK(c.cycles);
  CHECK(c.gens[1] == Perm::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(c.gens[2] == Perm(4));
  CHECK_NOTHROW(verify_order(c));
  CHECK(c.comments == std::vector<std::string>{"S4"});
}

TEST_CASE("groupio: round trip") {
  auto f = parse_group_file("degree 5\nname A5\norder 60\n2 3 1 4 5\n1 2 4 5 3\n");
  CHECK(parse_group_file(serialize_group(f)) == f);
  f.cycles = true;
  CHECK(parse_group_file(serialize_group(f)) == f);
  Registry R;
  for (const auto &n : R.names()) {
    CAPTURE(n);
    CHECK(parse_group_file(serialize_group(R.file(n))) == R.file(n));
  }
}

TEST_CASE("groupio: malformed input") {
  auto msg = [](const std::string &text) {
    try {
      parse_group_file(text);
    } catch (const GroupIOError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg("degree 3\n2 1 3\n2 2 1\n").find("line 3") != std::string::npos);
  CHECK(msg("degree 3\n2 1 3\n2 2 1\n").find("repeated") != std::string::npos);
  CHECK(msg("degree 3\n4 1 2\n").find("out of range") != std::string::npos);
  CHECK(msg("degree 3\n1 2\n").find("expected 3 images") != std::string::npos);
  CHECK(msg("2 1 3\n").find("before 'degree'") != std::string::npos);
  CHECK(msg("degree 3\ncolour red\n").find("unknown header") != std::string::npos);
  CHECK(msg("degree 3\nformat cycles\n(1,2\n").find("unclosed") != std::string::npos);
  CHECK(msg("degree 3\n1 x 2\n").find("line 2") != std::string::npos);
  CHECK_FALSE(msg("").empty());
  auto bad = parse_group_file("degree 3\norder 3\n2 1 3\n2 3 1\n");
  CHECK_THROWS_AS(verify_order(bad), GroupIOError);
}

TEST_CASE("groupio: registry") {
  Registry R;
  CHECK(R.lookup("M11").order() == 7920);
  CHECK(R.lookup("M12").order() == 95040);
  CHECK(R.lookup("A5").order() == 60);
  CHECK(R.lookup("S6").order() == 720);
  CHECK_THROWS_AS(R.lookup("M99"), GroupIOError);
  // every shipped file matches its declared order
  for (const auto &n : R.names()) {
    CAPTURE(n);
    const auto &f = R.file(n);
    REQUIRE(f.order);
    CHECK(closure_order(f) == *f.order);
  }
  CHECK(closure_order(R.file("M23")) == 10200960);
}

TEST_CASE("groupio: stabiliser chains") {
  Registry R;
  for (const char *n : {"M11", "M12", "M22", "A7", "S8"}) {
    CAPTURE(n);
    const auto &f = R.file(n);
    StabChain S(f.degree, f.gens);
    PermGroup G = R.lookup(n);
    CHECK(S.order() == G.order());
  }
  StabChain A(7, R.file("A7").gens);
  CHECK(A.contains(Perm::from_cycles(7, {{0, 1, 2}})));
  CHECK_FALSE(A.contains(Perm::from_cycles(7, {{0, 1}})));
  StabChain M12(12, R.file("M12").gens);
  for (const auto &g : R.file("M12/M11").gens) CHECK(M12.contains(g));
  CHECK_FALSE(M12.contains(Perm::from_cycles(12, {{0, 1}})));
}

TEST_CASE("sporadic: implicit containment agrees with the enumerated test") {
  Registry R;
  for (const char *g : {"M11", "M12"}) {
    PermGroup G = R.lookup(g);
    std::vector<std::string> subs;
    for (const auto &n : R.names())
      if (n.rfind(std::string(g) + "/", 0) == 0) subs.push_back(n);
    for (const auto &h : subs)
      for (const auto &k : subs) {
        CAPTURE(h);
        CAPTURE(k);
        auto H = subgroup_of(G, R.file(h).gens), K = subgroup_of(G, R.file(k).gens);
        CHECK(implicit_containment(R.file(g).gens, R.file(h).gens, R.file(k).gens).contained ==
              derangement_containment(G, H, K));
      }
  }
}

TEST_CASE("sporadic: rows") {
  Registry R;
  size_t negatives = 0;
  for (const auto &row : sporadic_rows()) {
    CAPTURE(row.str());
    auto r = check_sporadic_row(R, row);
    CHECK(r.index * r.h_order == r.g_order);
    CHECK(r.k_order >= r.h_order);
    if (row.published) CHECK(r.contained);
    if (!row.expected) {
      ++negatives;
      CHECK_FALSE(r.contained);
      CHECK(r.witness);
    }
  }
  CHECK(negatives == 5);
  // PSL2(11) has Klein four Sylow 2-subgroups, so no elements of order 4 or 8
  auto m12 = check_sporadic_row(R, *find_sporadic_row(R, "M12:PSL2(11):M11"));
  CHECK_FALSE(m12.contained);
  REQUIRE(m12.witness);
  CHECK(m12.witness->order() % 4 == 0);
}

TEST_CASE("sporadic: row lookup") {
  Registry R;
  auto r = find_sporadic_row(R, "M11:GL2(3):M9.2");
  REQUIRE(r);
  CHECK(r->H == "M11/GL2(3)");
  CHECK(r->K == "M11/M9:2");
  CHECK(r->published);
  auto s = find_sporadic_row(R, "M22:2^4:S5:2^4:A6");
  REQUIRE(s);
  CHECK(s->K == "M22/2^4:A6");
  CHECK_FALSE(find_sporadic_row(R, "M11:GL2(3):nothing"));
}

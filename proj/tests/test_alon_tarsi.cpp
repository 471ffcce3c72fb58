#include <doctest.h>

#include <random>

#include "atgraph/alon_tarsi.hpp"
#include "atgraph/errors.hpp"
#include "atgraph/io.hpp"
#include "atgraph/structure.hpp"
#include "atgraph/transforms.hpp"
#include "support.hpp"

using namespace atgraph;

TEST_CASE("degeneracy-order certificates") {
  Graph forest = Graph::build(6, {{0, 1}, {1, 2}, {3, 4}});
  Certificate cert = at_upper_bound(forest);
  CHECK(cert.k == 2);
  CHECK(cert.diff == 1);
  CHECK(cert.method == "degeneracy-order");
  CHECK(verify_certificate(forest, cert));

  for (int n = 2; n <= 5; n++) {
    for (int m = 2; m <= 4; m++) {
      Certificate c = at_upper_bound(f_sum(path(n), path(m), FKind::S));
      CHECK(c.k <= 3);
    }
  }
  Certificate r = at_upper_bound(f_sum(path(4), path(3), FKind::R));
  CHECK(r.k <= 3);
}

TEST_CASE("lower bounds") {
  CHECK(at_lower_bound(f_sum(path(5), path(3), FKind::T)) >= 4);
  CHECK(at_lower_bound(cycle(5)) == 3);
  // S(K3) is the 6-cycle: density exactly 1, so the bound is 2 there.
  CHECK(at_lower_bound(subdivision(complete(3))) == 2);
  for (int n : {4, 5}) CHECK(at_lower_bound(subdivision(complete(n))) == 3);
  CHECK(at_lower_bound(path(4)) == 2);
}

TEST_CASE("bipartite AT values") {
  CHECK(bipartite_at(path(2)) == 2);
  for (int n = 3; n <= 6; n++)
    for (int m = 2; m <= 5; m++) {
      CHECK(bipartite_at(f_sum(cycle(n), path(m), FKind::S)) == 3);
      CHECK(bipartite_at(f_sum(star(n), path(m), FKind::S)) == 3);
    }
  CHECK_THROWS_WITH_AS(bipartite_at(cycle(5)),
                       doctest::Contains("not bipartite"), Error);
}

TEST_CASE("exact AT on the small families") {
  for (int m = 2; m <= 4; m++) CHECK(at_exact(cycle(2 * m)).k == 2);
  CHECK(at_exact(theta(2, 2, 2)).k == 3);
  CHECK(at_exact(complete(4)).k == 4);
  CHECK(at_exact(path(5)).k == 2);
  CHECK(at_exact(path(1)).k == 1);
  CHECK(at_exact(cycle(5)).k == 3);
}

TEST_CASE("exact AT agrees with the exhaustive orientation oracle") {
  std::mt19937_64 rng(83);
  int checked = 0;
  for (int trial = 0; trial < 100; trial++) {
    Graph g = testsupport::random_graph(rng, 2 + trial % 5, 50);
    if (g.size() > 10) continue;
    AtExact result = at_exact(g);
    CHECK(result.k == testsupport::oracle_at(g));
    CHECK(result.k >= at_lower_bound(g));
    CHECK(result.k <= at_upper_bound(g).k);
    CHECK(verify_certificate(g, result.certificate));
    checked++;
  }
  CHECK(checked >= 60);
}

TEST_CASE("search certificates carry a nonzero recomputable diff") {
  AtExact even = at_exact(cycle(6));
  CHECK(even.certificate.method == "search");
  CHECK(even.certificate.diff == 2);
  CHECK(verify_certificate(cycle(6), even.certificate));
}

TEST_CASE("budget exhaustion reports a bracket") {
  SearchOptions opts;
  opts.budget = 16;
  Graph g = f_sum(path(3), path(2), FKind::T);
  try {
    at_exact(g, opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower() >= 3);
    CHECK(e.upper() == degeneracy(g).degeneracy + 1);
  }
}

TEST_CASE("subdivision orientation certificates") {
  for (int n : {3, 4, 5}) {
    Graph kn = complete(n);
    Certificate cert = subdivision_orientation(kn);
    CHECK(cert.k == 3);
    CHECK(cert.diff == 1);
    CHECK(cert.method == "subdivision-construction");
    CHECK(verify_certificate(subdivision(kn), cert));
  }
  // Valid but not tight for a single edge.
  Certificate loose = subdivision_orientation(path(2));
  CHECK(loose.k == 3);
  CHECK(verify_certificate(subdivision(path(2)), loose));

  Certificate sc4 = subdivision_orientation(cycle(4));
  CHECK(sc4.diff == 1);
  Orientation d = make_orientation(subdivision(cycle(4)), sc4.arcs);
  CHECK(d.max_outdeg() == 2);
}

TEST_CASE("s-sum orientation certificates") {
  // Small case: enumeration confirms the construction.
  Graph g = path(2), h = cycle(3);
  AtExact h_at = at_exact(h);
  Orientation d_h = make_orientation(h, h_at.certificate.arcs);
  Certificate cert = s_sum_orientation(g, h, d_h);
  CHECK(cert.k == 3);
  CHECK(cert.verified);
  CHECK(cert.diff != 0);
  Graph fs = f_sum(g, h, FKind::S);
  CHECK(verify_certificate(fs, cert));

  // k >= 3 partner: K4 at outdegree <= 3 gives k = 4.
  Graph g2 = path(3), h2 = complete(4);
  AtExact h2_at = at_exact(h2);
  Orientation d_h2 = make_orientation(h2, h2_at.certificate.arcs);
  Certificate cert2 = s_sum_orientation(g2, h2, d_h2);
  CHECK(cert2.k == 4);
  CHECK(!cert2.verified);  // 34 edges, beyond the default recompute limit
  DiffOptions wide;
  wide.max_edges = 40;
  Graph fs2 = f_sum(g2, h2, FKind::S);
  CHECK(eulerian_diff(make_orientation(fs2, cert2.arcs), wide).diff() ==
        cert2.diff);
  CHECK(cert2.diff != 0);

  // A zero-diff orientation is rejected.
  std::vector<Arc> cyclic{{0, 1}, {1, 2}, {2, 0}};
  Orientation bad = make_orientation(cycle(3), cyclic);
  CHECK_THROWS_WITH_AS(s_sum_orientation(g, h, bad),
                       doctest::Contains("not an AT-orientation"), Error);
}

TEST_CASE("s-sum difference is the per-copy difference to the |V(g)| power") {
  // Directed C6 has diff 2; two copies across P2 give 4. The subdivision
  // arcs cannot appear in any Eulerian subdigraph, so the recomputed value
  // confirms the product structure.
  std::vector<Arc> ring;
  for (int i = 0; i < 6; i++) ring.push_back({i, (i + 1) % 6});
  Orientation d_h = make_orientation(cycle(6), ring);
  Certificate cert = s_sum_orientation(path(2), cycle(6), d_h);
  CHECK(cert.k == 3);  // floor for the construction even though max outdeg is 2
  CHECK(cert.diff == 4);
  CHECK(cert.verified);  // 24 edges, within the recompute limit
  CHECK(verify_certificate(f_sum(path(2), cycle(6), FKind::S), cert));
}

TEST_CASE("verify_certificate rejects tampering") {
  Graph g = cycle(6);
  Certificate cert = at_exact(g).certificate;
  REQUIRE(verify_certificate(g, cert));

  Certificate flipped = cert;
  std::swap(flipped.arcs[0].tail, flipped.arcs[0].head);
  std::string reason;
  CHECK(!verify_certificate(g, flipped, &reason));
  CHECK(!reason.empty());

  Certificate wrong_graph = cert;
  CHECK(!verify_certificate(cycle(8), wrong_graph, &reason));
  CHECK(reason == "hash-mismatch");

  Certificate wrong_diff = cert;
  wrong_diff.diff = 99;
  CHECK(!verify_certificate(g, wrong_diff, &reason));
  CHECK(reason == "diff-mismatch");

  Certificate tight = cert;
  tight.k = 1;
  CHECK(!verify_certificate(g, tight, &reason));
  CHECK(reason == "outdegree-exceeds-budget");

  // Arcs that do not cover the edge set are structurally invalid.
  Certificate mangled = cert;
  mangled.arcs[0] = {0, 3};
  CHECK_THROWS_WITH_AS(verify_certificate(g, mangled),
                       doctest::Contains("edge set mismatch"), Error);
}

TEST_CASE("no certificate can claim k=2 for an odd cycle") {
  // Outdegree <= 1 on C5 forces one of the two directed cycles, whose diff
  // vanishes; any recorded diff therefore fails verification.
  Graph c5 = cycle(5);
  for (std::vector<Arc> arcs :
       {std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
        std::vector<Arc>{{1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 4}}}) {
    Certificate claim;
    claim.graph_sha = graph_sha256(c5);
    claim.k = 2;
    claim.arcs = arcs;
    claim.diff = eulerian_diff(make_orientation(c5, arcs)).diff();
    std::string reason;
    CHECK(!verify_certificate(c5, claim, &reason));
    CHECK(reason == "diff-zero");
  }
}

TEST_CASE("bipartite formula cross-validates the search") {
  std::mt19937_64 rng(89);
  int checked = 0;
  for (int trial = 0; trial < 60; trial++) {
    Graph g = testsupport::random_connected_graph(rng, 2 + trial % 6, 30);
    if (!is_bipartite(g).ok() || g.size() > 12) continue;
    CHECK(at_exact(g).k == bipartite_at(g));
    checked++;
  }
  CHECK(checked >= 20);
}

TEST_CASE("AT = 2 exactly matches the core characterization") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; trial++) {
    Graph g = testsupport::random_connected_graph(rng, 2 + trial % 6, 25);
    CHECK((at_exact(g).k == 2) == at_equals_two(g));
  }
}

#include <doctest.h>

#include "../support/blade.hpp"
#include "petriforge/coverability.hpp"
#include "petriforge/reachability.hpp"

using namespace petriforge;

TEST_CASE("bounded net: coverability graph equals reachability graph") {
  const auto mn = testsupport::blade_net(6, 3);
  const auto c = build_coverability_graph(mn);
  const auto r = build_reachability_graph(mn);
  CHECK_FALSE(c.has_omega());
  CHECK(is_bounded(mn));
  CHECK(c.node_count() == r.node_count());
  CHECK(c.edge_count() == r.edge_count());
}

TEST_CASE("a token generator yields omega") {
  NetBuilder b;
  const auto p = b.add_place("p");
  const auto q = b.add_place("q");
  const auto t = b.add_transition("t");
  b.add_arc(p, t);
  b.add_arc(t, p);
  b.add_arc(t, q);
  const MarkedNet mn(b.build(), Marking{1, 0});
  const auto g = build_coverability_graph(mn);
  CHECK(g.has_omega());
  CHECK_FALSE(is_bounded(mn));
  bool q_omega = false, p_omega = false;
  for (const auto& m : g.markings()) {
    q_omega = q_omega || m.is_omega(q);
    p_omega = p_omega || m.is_omega(p);
  }
  CHECK(q_omega);
  CHECK_FALSE(p_omega);
  CHECK(g.node_count() == 2);
}

TEST_CASE("omega absorbs firing") {
  NetBuilder b;
  const auto p = b.add_place("p");
  const auto t = b.add_transition("t");
  b.add_arc(p, t, 5);
  b.add_arc(t, p, 1);
  const PetriNet net = b.build();
  const ExtendedMarking w(std::vector<Tokens>{kOmega});
  CHECK(is_enabled(net, w, t));
  CHECK(fire(net, w, t).is_omega(p));
  CHECK(w.to_string() == "(ω)");
}

#include <doctest.h>

#include "petriforge/models.hpp"

using namespace petriforge;

TEST_CASE("all contract tables validate at p=1") {
  for (auto v : {ModelVariant::ACoranica, ModelVariant::OSchinzii,
                 ModelVariant::OSchinziiNoGoBackHome}) {
    const ModelSpec spec = model_spec(v);
    const auto contracts = appendix_contracts(v);
    CHECK(contracts.size() == 8);
    for (const auto& c : contracts) {
      CAPTURE(variant_id(v));
      CAPTURE(c.subprocess);
      const ContractReport r = validate_contract(spec, c);
      CHECK(r.pass);
      CHECK(r.explored_states > 0);
      CHECK(r.terminal_states > 0);
      CHECK(r.rows.size() == c.rows.size());
    }
  }
}

TEST_CASE("contract tables scale with parameters") {
  ModelParams q;
  q.nb = 3;
  q.sb = 3;
  q.nr = 2;
  q.ng = 2;
  for (auto v : {ModelVariant::ACoranica, ModelVariant::OSchinzii}) {
    const ModelSpec spec = model_spec(v, q);
    for (const auto& c : appendix_contracts(v, q)) {
      CAPTURE(variant_id(v));
      CAPTURE(c.subprocess);
      CHECK(validate_contract(spec, c).pass);
    }
  }
}

TEST_CASE("a wrong final column fails and reports the closest marking") {
  const ModelSpec spec = model_spec(ModelVariant::OSchinzii);
  auto c = appendix_contracts(ModelVariant::OSchinzii).front();
  REQUIRE(!c.rows.empty());
  c.rows.front().final += 5;
  const ContractReport r = validate_contract(spec, c);
  CHECK_FALSE(r.pass);
  std::size_t failing = 0;
  for (const auto& row : r.rows) failing += row.pass ? 0 : 1;
  CHECK(failing == 1);
}

TEST_CASE("unknown places are rejected by name") {
  const ModelSpec spec = model_spec(ModelVariant::ACoranica);
  SubprocessContract c{1, "bad", {{"No such place", 1, 0}}};
  CHECK_THROWS_AS(validate_contract(spec, c), UnknownPlaceError);
  SubprocessContract empty{42, "none", {}};
  CHECK_THROWS_AS(validate_contract(spec, empty), UnknownPlaceError);
}

TEST_CASE("place lookup ignores case only when unambiguous") {
  const ModelSpec spec = model_spec(ModelVariant::ACoranica);
  SubprocessContract c = appendix_contracts(ModelVariant::ACoranica)[2];
  for (auto& row : c.rows) {
    if (row.place == "Collected firewood") row.place = "COLLECTED FIREWOOD";
  }
  CHECK(validate_contract(spec, c).pass);
}

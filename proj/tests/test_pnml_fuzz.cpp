#include <doctest.h>

#include <random>

#include "petriforge/models.hpp"
#include "petriforge/pnml.hpp"

using namespace petriforge;

namespace {

// Parsing either succeeds or throws PnmlError; anything else fails the test.
void parse_quietly(const std::string& xml) {
  try {
    parse_pnml(xml);
  } catch (const PnmlError&) {
  }
}

}  // namespace

TEST_CASE("mutated documents never escape as untyped errors") {
  std::mt19937_64 rng(2024);
  std::vector<std::string> seeds;
  for (auto v : kAllVariants) seeds.push_back(write_pnml(build_model(v)));
  const std::string alphabet = "<>/=\"' &;!?-abcdeinprtx0123456789\n";
  for (int i = 0; i < 3000; ++i) {
    std::string doc = seeds[i % seeds.size()];
    if (i % 4 == 0) doc = doc.substr(0, std::uniform_int_distribution<std::size_t>(0, doc.size())(rng));
    const int edits = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int e = 0; e < edits && !doc.empty(); ++e) {
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, doc.size() - 1)(rng);
      const char ch = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      switch (rng() % 4) {
        case 0: doc[pos] = ch; break;
        case 1: doc.insert(doc.begin() + static_cast<std::ptrdiff_t>(pos), ch); break;
        case 2: doc.erase(pos, std::uniform_int_distribution<std::size_t>(1, 40)(rng)); break;
        default: {
          // duplicate a slice elsewhere
          const std::size_t len = std::min<std::size_t>(60, doc.size() - pos);
          const std::string slice = doc.substr(pos, len);
          doc.insert(std::uniform_int_distribution<std::size_t>(0, doc.size())(rng), slice);
        }
      }
    }
    CAPTURE(doc);
    REQUIRE_NOTHROW(parse_quietly(doc));
  }
}

TEST_CASE("random bytes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::string doc(std::uniform_int_distribution<std::size_t>(0, 300)(rng), '\0');
    for (auto& ch : doc) ch = static_cast<char>(rng() & 0xff);
    if (i % 2 == 0) doc = "<pnml>" + doc;
    REQUIRE_NOTHROW(parse_quietly(doc));
  }
}

TEST_CASE("structural edge cases") {
  const std::string head = "<pnml xmlns=\"http://www.pnml.org/version-2009/grammar/pnml\">";
  const std::string type = "http://www.pnml.org/version-2009/grammar/ptnet";
  const std::vector<std::string> docs = {
      "",
      "<pnml/>",
      head + "<net/></pnml>",
      head + "<net id=\"n\" type=\"" + type + "\"/></pnml>",
      head + "<net id=\"n\" type=\"" + type + "\"><page id=\"p\"><place id=\"a\"><initialMarking/>" +
          "</place><transition id=\"t\"/></page></net></pnml>",
      head + "<net id=\"n\" type=\"" + type + "\"><page id=\"p\"><place id=\"a\"><initialMarking>" +
          "<text>99999999999999999999999</text></initialMarking></place><transition id=\"t\"/>" +
          "</page></net></pnml>",
      head + "<net id=\"n\" type=\"" + type + "\"><page id=\"p\"><place id=\"a\"/><transition id=\"t\"/>" +
          "<arc id=\"x\" source=\"a\"/></page></net></pnml>",
      head + "<net id=\"n\" type=\"" + type + "\"><page id=\"p\"><page id=\"p\"/></page></net></pnml>",
  };
  for (const auto& d : docs) {
    CAPTURE(d);
    CHECK_THROWS_AS(parse_pnml(d), PnmlError);
  }
}

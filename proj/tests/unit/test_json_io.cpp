#include <doctest.h>

#include <sstream>

#include "nervekit/cli.hpp"
#include "nervekit/json_io.hpp"
#include "nervekit/zoo.hpp"
#include "support/categories.hpp"
#include "support/kan_instances.hpp"

using namespace nervekit;

namespace {

const std::string kInputs = std::string(NERVEKIT_GOLDEN_DIR) + "/inputs/";

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::UsageError;
}

int run(const std::vector<std::string>& args, std::string* text = nullptr) {
  std::ostringstream out, err;
  int rc = dispatch(args, out, err);
  if (text) *text = out.str() + err.str();
  return rc;
}

}  // namespace

TEST_CASE("groupoid JSON round trip") {
  for (const auto& g : {zoo::point(), zoo::cyclic_group(3), zoo::symmetric_group(3), zoo::pair_groupoid({"x", "y", "z"}),
                        zoo::regular_action(*zoo::cyclic_group(2))}) {
    auto j = groupoid_to_json(*g);
    auto back = groupoid_from_json(parse_json(j.dump(), "test"));
    CHECK(same_groupoid(g, back));
    CHECK(groupoid_to_json(*back).dump() == j.dump());
  }
}

TEST_CASE("category JSON round trip") {
  for (const auto& inst : support::localization_zoo()) {
    const auto& c = inst.r.category;
    auto back = category_from_json(category_to_json(*c));
    CHECK_MESSAGE(same_category(c, back), inst.name);
  }
}

TEST_CASE("cocycle JSON round trip") {
  auto c = cocycle_from_json(read_json_file(kInputs + "cocycle_twist.json"));
  CHECK(cocycle_verdict(c).ok);
  auto back = cocycle_from_json(cocycle_to_json(c));
  CHECK(back.a == c.a);
  CHECK(back.gamma == c.gamma);
  CHECK(cocycle_to_json(back).dump() == cocycle_to_json(c).dump());
}

TEST_CASE("schema errors carry witnesses") {
  auto z2 = read_json_file(kInputs + "z2.json");
  auto missing = z2;
  missing.erase("inv");
  CHECK(kind_of([&] { groupoid_from_json(missing); }) == ErrorKind::InvalidInput);
  auto extra = z2;
  extra["colour"] = "red";
  CHECK(kind_of([&] { groupoid_from_json(extra); }) == ErrorKind::InvalidInput);
  auto dangling = z2;
  dangling["comp"][0][2] = "h";
  CHECK(kind_of([&] { groupoid_from_json(dangling); }) == ErrorKind::DanglingId);
  CHECK(kind_of([&] { groupoid_from_json(read_json_file(kInputs + "broken.json")); }) == ErrorKind::AxiomViolation);
  CHECK(kind_of([&] { parse_json("{", "text"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { read_json_file(kInputs + "absent.json"); }) == ErrorKind::InvalidInput);
  auto bad_gamma = read_json_file(kInputs + "cocycle_twist.json");
  bad_gamma["gamma"]["UV"] = Json::object();
  CHECK(kind_of([&] { cocycle_from_json(bad_gamma); }) == ErrorKind::InvalidInput);
}

TEST_CASE("kan input matches the in-code discrete product instance") {
  auto in = kan_from_json(read_json_file(kInputs + "kan_vee_base.json"), read_json_file(kInputs + "kan_trivial_fibers.json"),
                          read_json_file(kInputs + "kan_vee_along.json"), read_json_file(kInputs + "kan_vee_lift.json"));
  auto k = support::kan_discrete_product();
  auto a = right_kan(in.ic, in.p, in.f, in.lift);
  auto b = right_kan(k.ic, k.p, k.f, k.lift);
  REQUIRE(a.lift.sets.size() == b.lift.sets.size());
  for (std::size_t d = 0; d < a.lift.sets.size(); ++d) CHECK(a.lift.sets[d] == b.lift.sets[d]);
  REQUIRE(in.tests.size() == k.qs.size());
  for (std::size_t i = 0; i < k.qs.size(); ++i) {
    CHECK(in.tests[i].sets == k.qs[i].sets);
    CHECK(adjunction_check(in.ic, in.f, in.lift, in.tests[i], a).verdict.ok);
  }
}

TEST_CASE("diagram JSON fills in identities") {
  auto d = groupoid_diagram_from_json(read_json_file(kInputs + "diagram_bz2.json"));
  CHECK(d.arrows.size() == 3);
  auto cover = cover_from_json(d, read_json_file(kInputs + "cover_atlas.json"));
  CHECK(cover.source->num_objects() == 2);
}

TEST_CASE("dispatch exit codes") {
  std::string text;
  CHECK(run({"homology", "--groupoid", kInputs + "z2.json", "--dim", "4", "--degree", "1"}, &text) == 0);
  CHECK(text.find("H_1 = Z/2\n") != std::string::npos);
  CHECK(run({"validate", "--groupoid", kInputs + "broken.json"}, &text) == 2);
  CHECK(text.find("error: AxiomViolation: ") != std::string::npos);
  CHECK(run({"morita-check", "--functor", kInputs + "z2_to_pt.json", "--dim", "3"}, &text) == 1);
  CHECK(text.find("FAIL weak_equivalence") != std::string::npos);
  CHECK(run({"morita-check", "--functor", kInputs + "pt_to_pair.json"}, &text) == 0);
  CHECK(run({}, &text) == 2);
  CHECK(run({"nerve"}, &text) == 2);
  CHECK(text.find("UsageError") != std::string::npos);
  CHECK(run({"milnor", "--groupoid", kInputs + "z2.json", "--space", "C"}, &text) == 2);
  CHECK(run({"torsor", "--cocycle", kInputs + "cocycle_twist.json"}, &text) == 2);
  CHECK(run({"homology", "--help"}, &text) == 0);
}

TEST_CASE("digest depends only on input bytes") {
  std::string a, b;
  run({"nerve", "--groupoid", kInputs + "z3.json", "--dim", "2"}, &a);
  run({"homology", "--groupoid", kInputs + "z3.json", "--dim", "2"}, &b);
  auto digest = [](const std::string& s) { return s.substr(s.find("sha256:"), 71); };
  CHECK(digest(a) == digest(b));
  CHECK(digest(a) == "sha256:" + sha256_hex([&] {
          std::string bytes;
          read_json_file(kInputs + "z3.json", &bytes);
          return bytes;
        }()));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

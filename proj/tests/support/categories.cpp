#include "support/categories.hpp"

#include <stdexcept>

using namespace nervekit;

namespace support {

namespace {

LocalizationInstance with_oracles(std::string name, CategoryHandle c, const std::vector<MorphismId>& members) {
  auto least = PullbackOracle::by_enumeration(*c, false);
  auto greatest = PullbackOracle::by_enumeration(*c, true);
  return {std::move(name), make_class(c, members, least), make_class(c, members, greatest)};
}

std::vector<MorphismId> all_of(const FiniteCategory& c) {
  std::vector<MorphismId> out(c.num_morphisms());
  for (MorphismId f = 0; f < out.size(); ++f) out[f] = f;
  return out;
}

}  // namespace

MorphismId mor(const FiniteCategory& c, const std::string& name) {
  auto f = c.find_morphism(name);
  if (!f) throw std::out_of_range("no morphism " + name);
  return *f;
}

std::size_t obj(const FiniteCategory& c, const std::string& name) {
  auto x = c.find_object(name);
  if (!x) throw std::out_of_range("no object " + name);
  return *x;
}

LocalizationInstance chain2() {
  auto c = poset_category({"0", "1"}, {{"0", "1"}});
  return with_oracles("chain2", c, all_of(*c));
}

LocalizationInstance chain4() {
  auto c = poset_category({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}});
  return with_oracles("chain4", c, all_of(*c));
}

LocalizationInstance subsets2() {
  auto c = poset_category({"e", "1", "2", "12"}, {{"e", "1"}, {"e", "2"}, {"1", "12"}, {"2", "12"}});
  return with_oracles("subsets2", c, all_of(*c));
}

LocalizationInstance finset_injections() {
  auto c = finset_category({{"0", 0}, {"1", 1}, {"2", 2}});
  std::vector<MorphismId> inj;
  for (MorphismId f = 0; f < c->num_morphisms(); ++f) {
    // Names end in the image list; a map is injective iff its images are distinct.
    const std::string& n = c->morphism_name(f);
    std::string images = n.substr(n.find('['));
    bool injective = !(images == "[0,0]" || images == "[1,1]");
    if (injective) inj.push_back(f);
  }
  return with_oracles("finset_injections", c, inj);
}

LocalizationInstance finset_isos() {
  auto c = finset_category({{"1", 1}, {"2", 2}});
  std::vector<MorphismId> isos{mor(*c, "1->1:[0]"), mor(*c, "2->2:[0,1]"), mor(*c, "2->2:[1,0]")};
  return with_oracles("finset_isos", c, isos);
}

LocalizationInstance zigzag3() {
  auto c = concrete_category({{"X", 1}, {"V", 2}, {"Y", 2}}, {{"r", "V", "X", {0, 0}},
                                                              {"t", "X", "V", {0}},
                                                              {"t2", "X", "V", {1}},
                                                              {"g", "V", "Y", {0, 1}}});
  return {"zigzag3", make_class(c, composition_closure(*c, {mor(*c, "r")})), std::nullopt};
}

LocalizationInstance cylinder5() {
  auto c = concrete_category({{"X", 1}, {"I", 2}, {"Y", 3}, {"A", 1}, {"B", 2}}, {{"r", "I", "X", {0, 0}},
                                                                                  {"i0", "X", "I", {0}},
                                                                                  {"i1", "X", "I", {1}},
                                                                                  {"h", "I", "Y", {0, 1}},
                                                                                  {"c", "X", "Y", {2}},
                                                                                  {"k", "Y", "B", {0, 0, 1}},
                                                                                  {"a", "A", "X", {0}}});
  return {"cylinder5", make_class(c, composition_closure(*c, {mor(*c, "r")})), std::nullopt};
}

std::vector<LocalizationInstance> localization_zoo() {
  return {chain2(), chain4(), subsets2(), finset_injections(), finset_isos(), zigzag3(), cylinder5()};
}

}  // namespace support

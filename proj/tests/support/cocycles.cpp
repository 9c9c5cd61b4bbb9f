#include "support/cocycles.hpp"

#include <random>

#include "nervekit/zoo.hpp"

namespace support {

using namespace nervekit;

Cocycle named_cocycle(GroupoidHandle target, const CoveredSpace& cover,
                      const std::map<std::string, std::map<std::string, std::string>>& a,
                      const std::map<std::string, std::map<std::string, std::string>>& gamma) {
  Cocycle c = Cocycle::blank(target, cover);
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < cover.num_sets(); ++i)
      if (cover.index_names[i] == name) return i;
    throw Error(ErrorKind::InvalidInput, name);
  };
  auto point = [&](const std::string& name) {
    for (std::size_t w = 0; w < cover.num_points(); ++w)
      if (cover.points[w] == name) return w;
    throw Error(ErrorKind::InvalidInput, name);
  };
  for (const auto& [i, row] : a)
    for (const auto& [w, x] : row) c.a[index(i)][point(w)] = *target->find_object(x);
  for (const auto& [ij, row] : gamma) {
    auto comma = ij.find(',');
    std::size_t i = index(ij.substr(0, comma)), j = index(ij.substr(comma + 1));
    for (const auto& [w, arrow] : row) c.gamma[i][j][point(w)] = *target->find_arrow(arrow);
  }
  return c;
}

Cocycle two_chart_z2(bool twisted) {
  auto cover = make_cover({"w"}, {{"0", {"w"}}, {"1", {"w"}}});
  std::string t = twisted ? "g" : "e";
  return named_cocycle(zoo::cyclic_group(2), cover, {{"0", {{"w", "*"}}}, {"1", {{"w", "*"}}}},
                       {{"0,0", {{"w", "e"}}}, {"1,1", {{"w", "e"}}}, {"0,1", {{"w", t}}}, {"1,0", {{"w", t}}}});
}

std::vector<Cocycle> generated_cocycles(std::uint32_t seed, std::size_t count) {
  std::mt19937 rng(seed);
  auto z2 = zoo::cyclic_group(2);
  std::vector<GroupoidHandle> targets = {z2,
                                         zoo::cyclic_group(3),
                                         zoo::symmetric_group(3),
                                         zoo::pair_groupoid({"x", "y"}),
                                         action_groupoid({"1", "2"}, *z2, {{0, 1}, {1, 0}}),
                                         zoo::disjoint_union(*z2, *zoo::pair_groupoid({"x", "y"}))};
  std::vector<Cocycle> out;
  for (std::size_t n = 0; n < count; ++n) {
    GroupoidHandle g = targets[n % targets.size()];
    const std::size_t points = 1 + rng() % 4;
    const std::size_t sets = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t w = 0; w < points; ++w) names.push_back("w" + std::to_string(w));
    std::vector<std::vector<std::string>> members(sets);
    for (std::size_t w = 0; w < points; ++w) {
      std::size_t home = rng() % sets;
      for (std::size_t i = 0; i < sets; ++i)
        if (i == home || rng() % 2 == 0) members[i].push_back(names[w]);
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> family;
    for (std::size_t i = 0; i < sets; ++i) family.emplace_back("U" + std::to_string(i), members[i]);
    Cocycle c = Cocycle::blank(g, make_cover(names, family));
    for (std::size_t w = 0; w < points; ++w) {
      ObjectId base = rng() % g->num_objects();
      const auto& out_arrows = g->arrows_from(base);
      std::vector<ArrowId> beta(sets, kNone);
      for (std::size_t i = 0; i < sets; ++i)
        if (c.cover.contains(i, w)) {
          beta[i] = out_arrows[rng() % out_arrows.size()];
          c.a[i][w] = g->tgt(beta[i]);
        }
      for (std::size_t i = 0; i < sets; ++i)
        for (std::size_t j = 0; j < sets; ++j)
          if (beta[i] != kNone && beta[j] != kNone) c.gamma[i][j][w] = g->comp(g->inv(beta[i]), beta[j]);
    }
    out.push_back(validate_cocycle(std::move(c)));
  }
  return out;
}

}  // namespace support

#include "nervekit/cli.hpp"

#include <openssl/sha.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "nervekit/milnor.hpp"
#include "nervekit/pi1.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

int RunReport::exit_code() const {
  if (!error.empty()) return 2;
  for (const auto& v : verdicts)
    if (!v.ok) return 1;
  return 0;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "inputs: sha256:" << digest << "\n";
  for (const auto& line : outputs) os << line << "\n";
  for (const auto& v : verdicts) {
    os << (v.ok ? "PASS " : "FAIL ") << v.name;
    if (!v.witness.empty()) os << ": " << v.witness;
    os << "\n";
  }
  if (!error.empty()) os << "error: " << error << "\n";
  os << "exit: " << exit_code() << "\n";
  return os.str();
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = "sha256:" + digest;
  j["outputs"] = outputs;
  j["verdicts"] = Json::array();
  for (const auto& v : verdicts) j["verdicts"].push_back(Json{{"name", v.name}, {"ok", v.ok}, {"witness", v.witness}});
  if (!error.empty()) j["error"] = error;
  j["exit"] = exit_code();
  return j;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : md) {
    out += hex[c >> 4];
    out += hex[c & 15];
  }
  return out;
}

namespace {

struct Options {
  std::string groupoid, functor, cat, cls, cocycle, other, diagram, cover;
  std::string base, fibers, along, lift, from, to, basepoint, space = "B", json_out;
  std::size_t dim = 4, levels = 2, budget = 10000;
  std::optional<std::size_t> degree, homology_degree;
  bool compare_nerve = false, zigzag = false;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  RunReport report;

  Json load(const std::string& path) { return read_json_file(path, &bytes_); }
  void finish() { report.digest = sha256_hex(bytes_); }

  GroupoidHandle groupoid() { return groupoid_from_json(load(o_.groupoid)); }

  void validate() {
    if (o_.groupoid.empty() && o_.functor.empty() && o_.cat.empty() && o_.cocycle.empty() && o_.diagram.empty())
      throw Error(ErrorKind::UsageError, "validate needs at least one input");
    if (!o_.cls.empty() && o_.cat.empty()) throw Error(ErrorKind::UsageError, "--class needs --cat");
    if (!o_.groupoid.empty()) {
      auto g = groupoid();
      report.outputs.push_back("groupoid: " + std::to_string(g->num_objects()) + " objects, " +
                               std::to_string(g->num_arrows()) + " arrows");
      report.verdicts.push_back(Verdict::pass("groupoid"));
    }
    if (!o_.functor.empty()) {
      auto f = standalone_functor_from_json(load(o_.functor));
      report.outputs.push_back(std::string("weak equivalence: ") + (is_weak_equivalence(f) ? "yes" : "no"));
      report.verdicts.push_back(Verdict::pass("functor"));
    }
    if (!o_.cat.empty()) {
      auto c = category_from_json(load(o_.cat));
      report.outputs.push_back("category: " + std::to_string(c->num_objects()) + " objects, " +
                               std::to_string(c->num_morphisms()) + " morphisms");
      report.verdicts.push_back(Verdict::pass("category"));
      if (!o_.cls.empty()) {
        auto r = class_from_json(c, load(o_.cls));
        report.outputs.push_back("class: " + std::to_string(r.members().size()) + " members");
        report.verdicts.push_back(class_verdict(r));
      }
    }
    if (!o_.cocycle.empty()) report.verdicts.push_back(cocycle_verdict(cocycle_from_json(load(o_.cocycle))));
    if (!o_.diagram.empty()) {
      auto d = groupoid_diagram_from_json(load(o_.diagram));
      report.outputs.push_back("diagram: " + std::to_string(d.shape->num_objects()) + " groupoids");
      report.verdicts.push_back(Verdict::pass("diagram"));
    }
  }

  void nerve_cmd() {
    auto g = groupoid();
    auto s = nerve(*g, o_.dim);
    for (std::size_t n = 0; n <= o_.dim; ++n)
      report.outputs.push_back("N_" + std::to_string(n) + ": " + std::to_string(s.keys[n].size()) + " simplices, " +
                               std::to_string(s.count_nondegenerate(n)) + " nondegenerate");
    report.verdicts.push_back(check_simplicial_identities(s));
  }

  void homology_cmd() {
    auto g = groupoid();
    auto c = chain_complex(nerve(*g, o_.dim));
    if (o_.degree) {
      report.outputs.push_back(homology(c, *o_.degree).to_string());
    } else {
      if (o_.dim == 0) throw Error(ErrorKind::InsufficientTruncation, "dim 0 computes no homology");
      for (const auto& h : homology_range(c, o_.dim - 1)) report.outputs.push_back(h.to_string());
    }
    report.verdicts.push_back(check_boundary_squared(c));
  }

  void pi1_cmd() {
    auto g = groupoid();
    auto x = g->find_object(o_.basepoint);
    if (!x) throw Error(ErrorKind::UnknownBasepoint, o_.basepoint);
    auto r = pi1_iso_check(*g, *x, o_.budget);
    report.outputs.push_back("presentation: " + r.presentation.group.to_string());
    report.outputs.push_back("vertex group order: " + std::to_string(r.vertex_group_order));
    report.outputs.push_back("presentation order: " +
                             (r.presentation_order ? std::to_string(*r.presentation_order) : std::string("unknown")));
    report.outputs.push_back("status: " + r.status);
    report.verdicts.push_back(r.verdict);
  }

  void milnor_cmd() {
    auto g = groupoid();
    if (o_.space != "E" && o_.space != "B") throw Error(ErrorKind::UsageError, "--space is E or B");
    TruncatedSimplicialSet s =
        o_.space == "E" ? milnor_E(g, o_.levels).complex : milnor_B(g, o_.levels).complex;
    for (std::size_t n = 0; n < s.keys.size(); ++n)
      report.outputs.push_back(o_.space + "_" + std::to_string(n) + ": " + std::to_string(s.keys[n].size()) +
                               " simplices");
    auto c = chain_complex(s);
    report.verdicts.push_back(check_boundary_squared(c));
    if (o_.homology_degree) report.outputs.push_back(homology(c, *o_.homology_degree).to_string());
    if (o_.compare_nerve) {
      auto cmp = compare_with_nerve(g, o_.levels);
      for (std::size_t k = 0; k < cmp.milnor.size(); ++k)
        report.outputs.push_back("milnor " + cmp.milnor[k].to_string() + " | nerve " + cmp.nerve[k].to_string());
      for (auto& v : cmp.verdicts()) report.verdicts.push_back(v);
    }
  }

  void torsor_validate() { report.verdicts.push_back(cocycle_verdict(cocycle_from_json(load(o_.cocycle)))); }

  void torsor_build() {
    auto c = validate_cocycle(cocycle_from_json(load(o_.cocycle)));
    auto t = cocycle_to_torsor(c);
    report.outputs.push_back("elements: " + std::to_string(t.size()));
    for (std::size_t u = 0; u < t.size(); ++u)
      report.outputs.push_back(t.elements[u] + " over " + t.cover.points[t.p[u]] + " -> " +
                               t.target->object_name(t.f[u]));
    for (auto& v : torsor_verdicts(t)) report.verdicts.push_back(v);
  }

  void torsor_roundtrip() {
    auto c = validate_cocycle(cocycle_from_json(load(o_.cocycle)));
    auto t = cocycle_to_torsor(c);
    auto back = torsor_to_cocycle(t);
    report.outputs.push_back("cocycle: " + cocycle_to_json(back).dump());
    for (auto& v : torsor_verdicts(t)) report.verdicts.push_back(v);
    report.verdicts.push_back(cocycle_verdict(back));
    auto v = check_cocycle_morphism(back, c, roundtrip_morphism(t));
    v.name = "roundtrip_morphism";
    report.verdicts.push_back(v);
  }

  void torsor_compare() {
    auto c = validate_cocycle(cocycle_from_json(load(o_.cocycle)));
    auto c2 = validate_cocycle(cocycle_from_json(load(o_.other)));
    auto d = find_cocycle_morphism(c, c2, o_.budget * 100);
    Verdict v = d ? check_cocycle_morphism(c, c2, *d) : Verdict::fail("", "no morphism between the cocycles");
    v.name = "cocycle_morphism";
    report.verdicts.push_back(v);
    auto t = cocycle_to_torsor(c);
    auto t2 = cocycle_to_torsor(c2);
    report.outputs.push_back("torsor sizes: " + std::to_string(t.size()) + " and " + std::to_string(t2.size()));
    report.verdicts.push_back(torsor_isomorphic(t, t2, o_.budget * 100)
                                  ? Verdict::pass("torsor_isomorphism")
                                  : Verdict::fail("torsor_isomorphism", "no isomorphism over W"));
  }

  void localize_cmd() {
    auto c = category_from_json(load(o_.cat));
    auto r = class_from_json(c, load(o_.cls));
    auto x = c->find_object(o_.from);
    if (!x) throw Error(ErrorKind::UnknownObject, o_.from);
    auto y = c->find_object(o_.to);
    if (!y) throw Error(ErrorKind::UnknownObject, o_.to);
    auto sc = span_pi0(r, *x, *y);
    report.outputs.push_back("spans: " + std::to_string(sc.spans.size()));
    report.outputs.push_back("span classes: " + std::to_string(sc.size()));
    for (std::size_t k = 0; k < sc.size(); ++k)
      report.outputs.push_back("class " + std::to_string(k) + ": " + span_label(*c, sc.representatives[k]));
    report.verdicts.push_back(class_verdict(r));
    if (!o_.zigzag) return;
    try {
      auto z = zigzag_check(r, *x, *y);
      report.outputs.push_back("hom: " + std::to_string(z.hom_size) + ", homotopy classes: " +
                               std::to_string(z.homotopy_classes));
      for (auto& v : z.verdicts()) report.verdicts.push_back(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisFails) throw;
      report.verdicts.push_back(Verdict::fail("zigzag_hypothesis", e.what()));
    }
  }

  void kan_cmd() {
    auto in = kan_from_json(load(o_.base), load(o_.fibers), load(o_.along), load(o_.lift));
    std::optional<RightKan> rk;
    try {
      rk = right_kan(in.ic, in.p, in.f, in.lift);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFComplete) throw;
      report.verdicts.push_back(Verdict::fail("f_complete", e.what()));
      return;
    }
    report.verdicts.push_back(Verdict::pass("f_complete"));
    const auto& d = *in.p.source;
    for (std::size_t x = 0; x < d.num_objects(); ++x) {
      std::string line = "RF(P)(" + d.object_name(x) + ") = {";
      const auto& els = rk->lift.sets[x].elements;
      for (std::size_t i = 0; i < els.size(); ++i) line += (i ? ", " : "") + els[i];
      report.outputs.push_back(line + "}");
    }
    report.verdicts.push_back(lift_verdict(in.ic, rk->lift));
    for (std::size_t k = 0; k < in.tests.size(); ++k) {
      auto a = adjunction_check(in.ic, in.f, in.lift, in.tests[k], *rk);
      report.outputs.push_back("test " + std::to_string(k) + ": Hom(Q, RF(P)) = " + std::to_string(a.right_size) +
                               ", Hom(F^*Q, P) = " + std::to_string(a.left_size));
      a.verdict.name = "adjunction " + std::to_string(k);
      report.verdicts.push_back(a.verdict);
    }
  }

  void special_cmd() {
    auto d = groupoid_diagram_from_json(load(o_.diagram));
    auto cover = cover_from_json(d, load(o_.cover));
    auto s = diagram_special(d, cover);
    const auto& c = *d.shape;
    report.outputs.push_back("final: " + c.object_name(s.final));
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      const auto& g = *s.diagram.objects[x];
      report.outputs.push_back("X_" + c.object_name(x) + ": " + std::to_string(g.num_objects()) + " objects, " +
                               std::to_string(g.num_arrows()) + " arrows, " + std::to_string(pi0(g).classes.size()) +
                               " components");
    }
    for (auto& v : s.naturality) report.verdicts.push_back(v);
    for (auto& v : s.labels) report.verdicts.push_back(v);
  }

  void morita_cmd() {
    auto f = standalone_functor_from_json(load(o_.functor));
    report.verdicts.push_back(weak_equivalence_verdict(f));
    if (o_.dim == 0) throw Error(ErrorKind::InsufficientTruncation, "dim 0 computes no homology");
    auto a = homology_range(chain_complex(nerve(*f.source, o_.dim)), o_.dim - 1);
    auto b = homology_range(chain_complex(nerve(*f.target, o_.dim)), o_.dim - 1);
    for (std::size_t n = 0; n < a.size(); ++n) {
      report.outputs.push_back("H_" + std::to_string(n) + ": " + a[n].group.to_string() + " | " +
                               b[n].group.to_string());
      std::string name = "H_" + std::to_string(n) + " agrees";
      report.verdicts.push_back(a[n] == b[n] ? Verdict::pass(name)
                                             : Verdict::fail(name, a[n].group.to_string() + " vs " +
                                                                       b[n].group.to_string()));
    }
  }

 private:
  const Options& o_;
  std::string bytes_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite groupoids, nerves, torsors, localization and Kan extensions", "nervekit"};
  app.require_subcommand(1);
  std::string command;
  std::function<void(Runner&)> action;

  auto json_out = [&](CLI::App* s) { s->add_option("--json-out", o.json_out, "Also write the report as JSON"); };
  auto on = [&](CLI::App* s, std::string name, void (Runner::*m)()) {
    json_out(s);
    s->callback([&command, &action, name, m] {
      command = name;
      action = [m](Runner& r) { (r.*m)(); };
    });
  };

  auto* validate = app.add_subcommand("validate", "Check the axioms of each given input");
  validate->add_option("--groupoid", o.groupoid);
  validate->add_option("--functor", o.functor);
  validate->add_option("--cat", o.cat);
  validate->add_option("--class", o.cls);
  validate->add_option("--cocycle", o.cocycle);
  validate->add_option("--diagram", o.diagram);
  on(validate, "validate", &Runner::validate);

  auto* nerve_s = app.add_subcommand("nerve", "Simplex counts of the truncated nerve");
  nerve_s->add_option("--groupoid", o.groupoid)->required();
  nerve_s->add_option("--dim", o.dim, "Truncation level")->capture_default_str();
  on(nerve_s, "nerve", &Runner::nerve_cmd);

  auto* hom = app.add_subcommand("homology", "Integral homology of the nerve");
  hom->add_option("--groupoid", o.groupoid)->required();
  hom->add_option("--dim", o.dim, "Truncation level")->capture_default_str();
  hom->add_option("--degree", o.degree, "Single degree; all degrees below --dim otherwise");
  on(hom, "homology", &Runner::homology_cmd);

  auto* pi1 = app.add_subcommand("pi1", "Edge-path group compared with the vertex group");
  pi1->add_option("--groupoid", o.groupoid)->required();
  pi1->add_option("--basepoint", o.basepoint)->required();
  pi1->add_option("--budget", o.budget, "Coset budget")->capture_default_str();
  on(pi1, "pi1", &Runner::pi1_cmd);

  auto* milnor = app.add_subcommand("milnor", "Truncated join model");
  milnor->add_option("--groupoid", o.groupoid)->required();
  milnor->add_option("--levels", o.levels)->capture_default_str();
  milnor->add_option("--space", o.space, "E or B")->capture_default_str();
  milnor->add_option("--homology", o.homology_degree, "Degree to compute");
  milnor->add_flag("--compare-nerve", o.compare_nerve);
  on(milnor, "milnor", &Runner::milnor_cmd);

  auto* torsor = app.add_subcommand("torsor", "Cocycles and torsors");
  torsor->require_subcommand(1);
  auto torsor_sub = [&](const char* name, void (Runner::*m)()) {
    auto* s = torsor->add_subcommand(name);
    s->add_option("--cocycle", o.cocycle)->required();
    on(s, std::string("torsor ") + name, m);
    return s;
  };
  torsor_sub("validate", &Runner::torsor_validate);
  torsor_sub("build", &Runner::torsor_build);
  torsor_sub("roundtrip", &Runner::torsor_roundtrip);
  auto* compare = torsor_sub("compare", &Runner::torsor_compare);
  compare->add_option("--other", o.other)->required();
  compare->add_option("--budget", o.budget)->capture_default_str();

  auto* loc = app.add_subcommand("localize", "Span classes from X to Y");
  loc->add_option("--cat", o.cat)->required();
  loc->add_option("--class", o.cls)->required();
  loc->add_option("--from", o.from)->required();
  loc->add_option("--to", o.to)->required();
  loc->add_flag("--zigzag", o.zigzag, "Compare with R-homotopy classes");
  on(loc, "localize", &Runner::localize_cmd);

  auto* kan = app.add_subcommand("kan", "Right Kan extension of a lift");
  kan->add_option("--base", o.base)->required();
  kan->add_option("--fibers", o.fibers)->required();
  kan->add_option("--along", o.along)->required();
  kan->add_option("--lift", o.lift)->required();
  on(kan, "kan", &Runner::kan_cmd);

  auto* special = app.add_subcommand("diagram-special", "Pull a groupoid diagram back along a cover");
  special->add_option("--diagram", o.diagram)->required();
  special->add_option("--cover", o.cover)->required();
  on(special, "diagram-special", &Runner::special_cmd);

  auto* morita = app.add_subcommand("morita-check", "Weak equivalence and nerve homology on both sides");
  morita->add_option("--functor", o.functor)->required();
  morita->add_option("--dim", o.dim)->capture_default_str();
  on(morita, "morita-check", &Runner::morita_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = &app;
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
    out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const CLI::App* sub = &app;
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
    err << "error: UsageError: " << e.what() << "\n" << sub->help();
    return 2;
  }

  Runner runner(o);
  runner.report.command = command;
  try {
    action(runner);
  } catch (const Error& e) {
    runner.report.error = e.what();
  } catch (const std::exception& e) {
    runner.report.error = std::string("InvalidInput: ") + e.what();
  }
  runner.finish();
  out << runner.report.to_text();
  if (!o.json_out.empty()) {
    std::ofstream f(o.json_out, std::ios::binary);
    if (!f) {
      err << "error: InvalidInput: cannot write " << o.json_out << "\n";
      return 2;
    }
    f << runner.report.to_json().dump(2) << "\n";
  }
  return runner.report.exit_code();
}

}  // namespace nervekit

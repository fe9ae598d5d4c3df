#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rackenum/blueprint.hpp"
#include "rackenum/enumerate.hpp"
#include "rackenum/errors.hpp"
#include "rackenum/isomorphism.hpp"
#include "rackenum/perm_group.hpp"
#include "rackenum/rack_table.hpp"
#include "rackenum/xe_family.hpp"

using nlohmann::json;
using namespace rackenum;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

struct Output {
  bool doc = false;
  std::string out_path;  // empty = stdout

  void emit_text(const std::string& text) const {
    if (out_path.empty())
      std::cout << text;
    else
      write_file(out_path, text);
  }

  void emit(const std::string& text, const json& j) const {
    if (doc)
      emit_text(j.dump(2) + "\n");
    else
      emit_text(text);
  }
};

json table_json(const RackTable& t) {
  json rows = json::array();
  for (int x = 1; x <= t.order(); ++x) {
    json row = json::array();
    for (int y = 1; y <= t.order(); ++y) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

json breakdown_json(const std::vector<GroupClassRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"group_order", r.group_order},
                   {"orbit_sizes", r.orbit_sizes},
                   {"classes", r.classes}});
  return out;
}

std::string breakdown_text(const std::vector<GroupClassRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "group order=" << r.group_order << " orbits=";
    for (size_t i = 0; i < r.orbit_sizes.size(); ++i) {
      if (i) out << ',';
      out << r.orbit_sizes[i];
    }
    out << " classes=" << r.classes << "\n";
  }
  return out.str();
}

int require_rack(const RackTable& t, const std::string& label) {
  ValidationResult v = validate(t);
  if (v.cls == RackClass::not_rack) {
    std::cerr << label << " is not a rack: " << v.witness << "\n";
    return 1;
  }
  return 0;
}

int run_validate(const std::string& file, const Output& out) {
  RackTable t = RackTable::parse(read_file(file));
  ValidationResult v = validate(t);
  json j{{"file", file}, {"class", to_string(v.cls)}};
  std::string text = to_string(v.cls) + "\n";
  if (v.cls == RackClass::not_rack) {
    j["witness"] = v.witness;
    text = "not_rack: " + v.witness + "\n";
  }
  out.emit(text, j);
  return v.cls == RackClass::not_rack ? 1 : 0;
}

int run_canon(const std::string& file, const Output& out) {
  RackTable t = RackTable::parse(read_file(file));
  if (int rc = require_rack(t, file)) return rc;
  RackTable c = canonical_form(t);
  out.emit(c.format(), json{{"n", c.order()}, {"table", table_json(c)}});
  return 0;
}

int run_iso(const std::string& file_a, const std::string& file_b,
            const Output& out) {
  RackTable a = RackTable::parse(read_file(file_a));
  RackTable b = RackTable::parse(read_file(file_b));
  if (int rc = require_rack(a, file_a)) return rc;
  if (int rc = require_rack(b, file_b)) return rc;
  std::optional<Permutation> w = is_isomorphic(a, b);
  if (w) {
    out.emit(format_cycles(*w) + "\n",
             json{{"isomorphic", true}, {"witness", format_cycles(*w)}});
    return 0;
  }
  std::string reason = describe_difference(fingerprint(a), fingerprint(b));
  if (reason.empty()) reason = "no structure-preserving relabeling exists";
  out.emit("not isomorphic: " + reason + "\n",
           json{{"isomorphic", false}, {"reason", reason}});
  return 1;
}

int run_construct(const std::string& file, const Output& out) {
  RackBlueprint bp = parse_blueprint(read_file(file));
  BlueprintFlags flags = check_blueprint(bp);
  RackTable t = build_rack(bp);
  std::cerr << "condition_b=" << (flags.condition_b ? "true" : "false")
            << " quandle_ok=" << (flags.quandle_ok ? "true" : "false")
            << " kei_ok=" << (flags.kei_ok ? "true" : "false") << "\n";
  out.emit(t.format(), json{{"degree", t.order()},
                            {"table", table_json(t)},
                            {"condition_b", flags.condition_b},
                            {"quandle_ok", flags.quandle_ok},
                            {"kei_ok", flags.kei_ok}});
  return 0;
}

int run_decompose(const std::string& file, const Output& out) {
  RackTable t = RackTable::parse(read_file(file));
  if (int rc = require_rack(t, file)) return rc;
  RackBlueprint bp = decompose(t);
  json gens = json::array();
  for (const auto& g : bp.group.generators()) gens.push_back(format_cycles(g));
  json orbits = json::array();
  json pis = json::array();
  for (size_t i = 0; i < bp.pis.size(); ++i) {
    orbits.push_back(bp.orbits.representatives[i]);
    pis.push_back(format_cycles(bp.pis[i]));
  }
  out.emit(format_blueprint(bp), json{{"degree", bp.group.degree()},
                                      {"generators", gens},
                                      {"reps", orbits},
                                      {"pis", pis}});
  return 0;
}

int run_xe(int n, const std::string& file, const Output& out) {
  EMatrix e = EMatrix::parse(read_file(file));
  RackTable t = build_xe(n, e);
  out.emit(t.format(),
           json{{"n", n}, {"k", e.k}, {"table", table_json(t)}});
  return 0;
}

std::string representatives_text(const std::vector<RackTable>& reps) {
  std::ostringstream buf;
  for (size_t i = 0; i < reps.size(); ++i) {
    buf << "# representative " << (i + 1) << "\n";
    buf << reps[i].format();
  }
  return buf.str();
}

int run_enumerate(const EnumerationRequest& req, const std::string& emit_path,
                  const Output& out) {
  if (req.n == kBruteCapMax && req.engine != Engine::structured &&
      req.brute_cap >= kBruteCapMax)
    std::cerr << "warning: brute search at order " << kBruteCapMax
              << " is experimental and may take a long time\n";

  EnumerationResult res;
  json j;
  if (req.engine == Engine::both) {
    DualResult d = enumerate_both(req);
    if (!d.agree) {
      std::cerr << "engine disagreement: brute=" << d.brute.count
                << " structured=" << d.structured.count
                << (d.brute.representatives == d.structured.representatives
                        ? ""
                        : " (representative sets differ)")
                << "\n";
      return 1;
    }
    res = std::move(d.structured);
    j["brute_count"] = d.brute.count;
    j["structured_count"] = res.count;
    j["agree"] = true;
  } else {
    res = req.engine == Engine::brute ? enumerate_brute(req)
                                      : enumerate_structured(req);
  }

  if (!emit_path.empty())
    write_file(emit_path, representatives_text(res.representatives));

  j["n"] = req.n;
  j["kind"] = to_string(req.kind);
  j["engine"] = to_string(req.engine);
  j["count"] = res.count;
  j["group_breakdown"] = breakdown_json(res.breakdown);
  j["representatives_path"] =
      emit_path.empty() ? json(nullptr) : json(emit_path);

  std::string text = "count " + std::to_string(res.count) + "\n" +
                     breakdown_text(res.breakdown);
  out.emit(text, j);
  return 0;
}

int run_report(std::vector<int> ns, int brute_cap, int jobs,
               const Output& out) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<EnumerationResult> results;
  const int cap = std::min(brute_cap, kBruteCapMax);
  for (int n : ns) {
    if (n < 1 || n > cap) continue;
    for (RackClass kind :
         {RackClass::rack, RackClass::quandle, RackClass::kei}) {
      EnumerationRequest req;
      req.n = n;
      req.kind = kind;
      req.engine = Engine::brute;
      req.brute_cap = cap;
      req.jobs = jobs;
      results.push_back(enumerate_brute(req));
    }
  }

  BoundsReport bounds = bounds_report(results);
  std::ostringstream text;
  text << format_bounds_report(bounds);
  json jlb = json::array();
  for (int n : ns) {
    if (n < 2) continue;
    LowerBoundReport lb = lower_bound_report(n);
    std::ostringstream line;
    line.precision(12);
    line << "n=" << lb.n << " k=" << lb.k << " matrix_count="
         << lb.matrix_count.get_str() << " factorial=" << lb.factorial.get_str()
         << " guaranteed_classes=" << lb.guaranteed_classes.get_str()
         << " log2_bound=" << lb.log2_bound << "\n";
    text << line.str();
    jlb.push_back({{"n", lb.n},
                   {"k", lb.k},
                   {"matrix_count", lb.matrix_count.get_str()},
                   {"factorial", lb.factorial.get_str()},
                   {"guaranteed_classes", lb.guaranteed_classes.get_str()},
                   {"log2_bound", lb.log2_bound}});
  }

  json jrows = json::array();
  for (const auto& row : bounds.rows)
    jrows.push_back({{"n", row.n},
                     {"kind", to_string(row.kind)},
                     {"count", row.count},
                     {"log2_count_over_n2", row.log2_count_over_n2}});
  out.emit(text.str(), json{{"c1", bounds.c1},
                            {"c", bounds.c},
                            {"note",
                             "ratios are finite-n observations, not "
                             "asymptotic claims"},
                            {"lower_bounds", jlb},
                            {"observed", jrows}});
  return 0;
}

int run_selftest() {
  bool ok = true;
  const EMatrix e(3, {0, 1, 0, 1, 0, 1, 1, 0, 0});
  const std::vector<int> expected{
      1, 1, 2, 2, 1, 1, 1,  //
      2, 2, 1, 1, 2, 2, 2,  //
      4, 4, 3, 3, 4, 4, 3,  //
      3, 3, 4, 4, 3, 3, 4,  //
      6, 6, 5, 5, 5, 5, 5,  //
      5, 5, 6, 6, 6, 6, 6,  //
      7, 7, 7, 7, 7, 7, 7};
  RackTable t = build_xe(7, e);
  if (t.cells() == expected && classify(t) == RackClass::kei) {
    std::cout << "ok: 7-point reference kei reproduced\n";
  } else {
    std::cout << "FAIL: 7-point reference kei table mismatch\n";
    ok = false;
  }
  for (int n = 1; n <= 3; ++n) {
    for (RackClass kind :
         {RackClass::rack, RackClass::quandle, RackClass::kei}) {
      EnumerationRequest req;
      req.n = n;
      req.kind = kind;
      DualResult d = enumerate_both(req);
      if (d.agree) {
        std::cout << "ok: engines agree n=" << n << " kind=" << to_string(kind)
                  << " count=" << d.brute.count << "\n";
      } else {
        std::cout << "FAIL: engines disagree n=" << n
                  << " kind=" << to_string(kind) << " brute=" << d.brute.count
                  << " structured=" << d.structured.count << "\n";
        ok = false;
      }
    }
  }
  std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite racks, quandles and kei: build, validate, enumerate"};
  app.require_subcommand(1);

  std::string file, file_b, emit_path;
  std::string format = "text", out_path;
  std::string kind_s = "rack", engine_s = "both";
  int n = 0, jobs = 1;
  int brute_cap = kBruteCapDefault, degree_cap = kDefaultDegreeCap;
  std::vector<int> ns;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "doc"}));
    sub->add_option("--out", out_path,
                    "write primary output to this path instead of stdout");
  };

  auto* v = app.add_subcommand("validate", "classify a table file");
  v->add_option("file", file, "table file")->required();
  add_output(v);

  auto* c = app.add_subcommand("canon", "print the canonical form of a rack");
  c->add_option("file", file, "table file")->required();
  add_output(c);

  auto* i = app.add_subcommand("iso", "test two racks for isomorphism");
  i->add_option("fileA", file, "first table file")->required();
  i->add_option("fileB", file_b, "second table file")->required();
  add_output(i);

  auto* co = app.add_subcommand("construct", "build a rack from a blueprint");
  co->add_option("file", file, "blueprint file")->required();
  add_output(co);

  auto* de = app.add_subcommand("decompose",
                                "extract the blueprint of a rack");
  de->add_option("file", file, "table file")->required();
  add_output(de);

  auto* xe = app.add_subcommand("xe", "build the kei for a 0/1 matrix");
  xe->add_option("--n", n, "number of points")->required();
  xe->add_option("file", file, "matrix file")->required();
  add_output(xe);

  auto* en = app.add_subcommand("enumerate",
                                "count isomorphism classes at an order");
  en->add_option("--n", n, "order to enumerate")->required();
  en->add_option("--kind", kind_s, "rack, quandle or kei")
      ->check(CLI::IsMember({"rack", "quandle", "kei"}));
  en->add_option("--engine", engine_s, "brute, structured or both")
      ->check(CLI::IsMember({"brute", "structured", "both"}));
  en->add_option("--emit-tables", emit_path,
                 "write canonical representatives to this file");
  en->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 64));
  en->add_option("--brute-cap", brute_cap, "largest order for brute search")
      ->check(CLI::Range(1, kBruteCapMax));
  en->add_option("--degree-cap", degree_cap,
                 "largest order for the structured search")
      ->check(CLI::Range(1, kDefaultDegreeCap));
  add_output(en);

  auto* re = app.add_subcommand("report",
                                "constants, bounds and observed counts");
  re->add_option("--n", ns, "orders to report on (repeatable)");
  re->add_option("--brute-cap", brute_cap, "largest order to enumerate")
      ->check(CLI::Range(1, kBruteCapMax));
  re->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 64));
  add_output(re);

  auto* st = app.add_subcommand("selftest", "reference table and engine checks");

  std::function<int()> action;
  v->callback([&] {
    action = [&] { return run_validate(file, {format == "doc", out_path}); };
  });
  c->callback([&] {
    action = [&] { return run_canon(file, {format == "doc", out_path}); };
  });
  i->callback([&] {
    action = [&] {
      return run_iso(file, file_b, {format == "doc", out_path});
    };
  });
  co->callback([&] {
    action = [&] { return run_construct(file, {format == "doc", out_path}); };
  });
  de->callback([&] {
    action = [&] { return run_decompose(file, {format == "doc", out_path}); };
  });
  xe->callback([&] {
    action = [&] { return run_xe(n, file, {format == "doc", out_path}); };
  });
  en->callback([&] {
    action = [&] {
      EnumerationRequest req;
      req.n = n;
      req.kind = parse_rack_class(kind_s);
      req.engine = parse_engine(engine_s);
      req.emit_tables = !emit_path.empty();
      req.brute_cap = brute_cap;
      req.degree_cap = degree_cap;
      req.jobs = jobs;
      return run_enumerate(req, emit_path, {format == "doc", out_path});
    };
  });
  re->callback([&] {
    action = [&] {
      return run_report(ns, brute_cap, jobs, {format == "doc", out_path});
    };
  });
  st->callback([&] {
    action = [&] { return run_selftest(); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    std::cerr << "malformed: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const BlueprintError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Command line front end for the surgery calculus library.
//
// Exit codes: 0 success, 1 bad input or domain error, 2 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "knotcalc/concordance.hpp"
#include "knotcalc/database.hpp"
#include "knotcalc/dim_engine.hpp"
#include "knotcalc/graded.hpp"
#include "knotcalc/inference.hpp"
#include "knotcalc/knot_record.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/parity.hpp"
#include "knotcalc/slope.hpp"

using nlohmann::json;
using namespace knotcalc;

namespace {

enum class Format { human, tsv, json_fmt };

struct Globals {
  Format format = Format::human;
  std::string db_path;
  Database db;
  bool db_loaded = false;

  Database& database() {
    if (!db_loaded) {
      db = db_path.empty() ? seed_database() : load_database(db_path);
      db_loaded = true;
    }
    return db;
  }
};

Format parse_format(const std::string& f) {
  if (f == "human") return Format::human;
  if (f == "tsv") return Format::tsv;
  if (f == "json") return Format::json_fmt;
  throw CLI::ValidationError("--format must be human, tsv or json");
}

// A knot argument is a database name, optionally prefixed by '~' for the
// mirror, or an inline "nu,r0[,shape]" triple.
KnotRecord resolve_knot(Globals& g, std::string spec) {
  bool mirrored = false;
  if (!spec.empty() && spec.front() == '~') {
    mirrored = true;
    spec.erase(spec.begin());
  }
  KnotRecord rec;
  if (spec.find(',') != std::string::npos) {
    std::stringstream ss(spec);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument("inline knot must be nu,r0[,shape]");
    rec.name = spec;
    rec.nu_sharp = std::stoi(parts[0]);
    rec.r0 = std::stoi(parts[1]);
    if (parts.size() == 3) {
      if (parts[2] == "W")
        rec.shape = Shape::W;
      else if (parts[2] == "V")
        rec.shape = Shape::V;
      else
        throw std::invalid_argument("shape must be W or V");
    }
  } else {
    auto& db = g.database();
    auto it = db.records.find(spec);
    if (it == db.records.end())
      throw std::invalid_argument("no knot named '" + spec + "' in the database");
    rec = it->second;
  }
  return mirrored ? mirror(rec) : rec;
}

std::string dims_to_string(const std::set<int>& dims) {
  if (dims.size() == 1) return std::to_string(*dims.begin());
  std::string out = "{";
  for (int d : dims) out += (out.size() > 1 ? ", " : "") + std::to_string(d);
  return out + "}";
}

json dims_to_json(const std::set<int>& dims) {
  json arr = json::array();
  for (int d : dims) arr.push_back(d);
  return arr;
}

std::vector<Slope> parse_slope_range(const std::string& text) {
  std::vector<Slope> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty slope range");
    for (long long n = lo; n <= hi; ++n) out.push_back(normalize(n, 1));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_slope(item));
  if (out.empty()) throw std::invalid_argument("no slopes given");
  return out;
}

json record_report(const KnotRecord& rec) { return record_to_json(rec); }

// ---- command implementations -----------------------------------------

int cmd_dim(Globals& g, const std::string& knot, const std::string& slope,
            const std::string& bundle) {
  KnotRecord rec = resolve_knot(g, knot);
  Slope s = parse_slope(slope);
  Bundle b = bundle == "meridional" ? Bundle::meridional : Bundle::trivial;
  auto dims = dim_surgery(rec, s, b);
  switch (g.format) {
    case Format::human:
      std::cout << "dim I#(S^3_" << to_string(s) << "(" << rec.name
                << ")) = " << dims_to_string(dims) << "\n";
      break;
    case Format::tsv:
      std::cout << "slope\tdims\n" << to_string(s) << "\t" << dims_to_string(dims)
                << "\n";
      break;
    case Format::json_fmt:
      std::cout << json{{"knot", rec.name},
                        {"slope", to_string(s)},
                        {"bundle", bundle},
                        {"dims", dims_to_json(dims)}}
                       .dump(2)
                << "\n";
      break;
  }
  return 0;
}

int cmd_table(Globals& g, const std::string& knot, const std::string& range,
              const std::string& bundle) {
  KnotRecord rec = resolve_knot(g, knot);
  Bundle b = bundle == "meridional" ? Bundle::meridional : Bundle::trivial;
  auto rows = dim_table(rec, parse_slope_range(range), b);
  switch (g.format) {
    case Format::human:
      std::cout << "surgery dimensions for " << rec.name << ":\n";
      for (const auto& row : rows)
        std::cout << "  " << to_string(row.slope) << ": "
                  << dims_to_string(row.dims) << "\n";
      break;
    case Format::tsv:
      std::cout << "slope\tdims\n";
      for (const auto& row : rows)
        std::cout << to_string(row.slope) << "\t" << dims_to_string(row.dims)
                  << "\n";
      break;
    case Format::json_fmt: {
      json arr = json::array();
      for (const auto& row : rows)
        arr.push_back(
            {{"slope", to_string(row.slope)}, {"dims", dims_to_json(row.dims)}});
      std::cout << json{{"knot", rec.name}, {"rows", arr}}.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_bound(Globals& g, int D, bool include_exceptional, bool khovanov) {
  auto res = slope_bound(D, !include_exceptional);
  const char* context =
      khovanov ? "branched double covers (Khovanov-type bound)" : "surgeries";
  switch (g.format) {
    case Format::human:
      std::cout << "denominator bound for total dimension " << D << " ("
                << context << "): q <= " << res.q_max << "\n";
      if (!res.equality_cases.empty()) {
        std::cout << "bound attained by:\n";
        for (const auto& f : res.equality_cases)
          std::cout << "  p/q = " << f.p << "/" << f.q << " with (nu, r0) = ("
                    << f.nu << ", " << f.r0 << ")\n";
      }
      std::cout << res.feasible.size() << " feasible (p, q, nu, r0) solutions\n";
      break;
    case Format::tsv:
      std::cout << "p\tq\tnu\tr0\n";
      for (const auto& f : res.feasible)
        std::cout << f.p << "\t" << f.q << "\t" << f.nu << "\t" << f.r0 << "\n";
      break;
    case Format::json_fmt: {
      auto rows = [](const std::vector<FeasibleSurgery>& fs) {
        json arr = json::array();
        for (const auto& f : fs)
          arr.push_back({{"p", f.p}, {"q", f.q}, {"nu", f.nu}, {"r0", f.r0}});
        return arr;
      };
      std::cout << json{{"D", D},
                        {"q_max", res.q_max},
                        {"equality_cases", rows(res.equality_cases)},
                        {"feasible", rows(res.feasible)}}
                       .dump(2)
                << "\n";
      break;
    }
  }
  return 0;
}

int cmd_classify(Globals& g, int nu, int r0) {
  auto c = classify_small(nu, r0);
  switch (g.format) {
    case Format::human:
      std::cout << "(nu_sharp, r0) = (" << nu << ", " << r0
                << "): " << to_string(c.knot);
      if (c.conjectural) std::cout << " (conjectural list only)";
      std::cout << "\n";
      for (const auto& s : c.constraints) std::cout << "  - " << s << "\n";
      break;
    case Format::tsv: {
      std::cout << "knot\tconjectural\tconstraints\n"
                << to_string(c.knot) << "\t" << (c.conjectural ? 1 : 0) << "\t";
      for (size_t i = 0; i < c.constraints.size(); ++i)
        std::cout << (i ? "; " : "") << c.constraints[i];
      std::cout << "\n";
      break;
    }
    case Format::json_fmt:
      std::cout << json{{"nu_sharp", nu},
                        {"r0", r0},
                        {"knot", to_string(c.knot)},
                        {"conjectural", c.conjectural},
                        {"constraints", c.constraints}}
                       .dump(2)
                << "\n";
      break;
  }
  return 0;
}

int cmd_sum(Globals& g, const std::vector<std::string>& knots) {
  SumExpr expr;
  std::string label;
  for (const auto& spec : knots) {
    expr.summands.push_back({resolve_knot(g, spec), false});
    label += (label.empty() ? "" : " # ") + expr.summands.back().first.name;
  }
  auto inv = sum_invariants(expr);
  auto nu_str = [&]() {
    if (inv.nu_candidates.empty()) return std::string("unknown");
    std::string s = "{";
    for (int v : inv.nu_candidates) s += (s.size() > 1 ? ", " : "") + std::to_string(v);
    return s + "}";
  };
  switch (g.format) {
    case Format::human:
      std::cout << label << ":\n";
      std::cout << "  nu_sharp candidates: " << nu_str() << "\n";
      std::cout << "  tau_sharp: "
                << (inv.tau_sharp ? std::to_string(*inv.tau_sharp) : "unknown")
                << "\n";
      std::cout << "  epsilon_sharp: "
                << (inv.eps.value ? std::to_string(*inv.eps.value) : "unknown")
                << "\n";
      std::cout << "  shape: " << (inv.shape ? to_string(*inv.shape) : "unknown")
                << "\n";
      break;
    case Format::tsv:
      std::cout << "nu_candidates\ttau\tepsilon\tshape\n"
                << nu_str() << "\t"
                << (inv.tau_sharp ? std::to_string(*inv.tau_sharp) : "?") << "\t"
                << (inv.eps.value ? std::to_string(*inv.eps.value) : "?") << "\t"
                << (inv.shape ? to_string(*inv.shape) : "?") << "\n";
      break;
    case Format::json_fmt: {
      json j{{"sum", label}};
      j["nu_candidates"] = inv.nu_candidates;
      if (inv.tau_sharp) j["tau_sharp"] = *inv.tau_sharp;
      if (inv.eps.value) j["epsilon_sharp"] = *inv.eps.value;
      if (inv.shape) j["shape"] = to_string(*inv.shape);
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_compare(Globals& g, const std::string& a, const std::string& b) {
  KnotRecord ra = resolve_knot(g, a);
  KnotRecord rb = resolve_knot(g, b);
  Order o = compare(ra, rb);
  if (g.format == Format::json_fmt)
    std::cout << json{{"left", ra.name}, {"right", rb.name}, {"order", to_string(o)}}
                     .dump(2)
              << "\n";
  else
    std::cout << ra.name << " vs " << rb.name << ": " << to_string(o) << "\n";
  return 0;
}

int cmd_infer(Globals& g, const std::string& knot, int nu_bound) {
  KnotRecord rec;
  if (knot.size() > 5 && knot.substr(knot.size() - 5) == ".json") {
    std::ifstream in(knot);
    if (!in) throw std::invalid_argument("cannot open '" + knot + "'");
    json j;
    in >> j;
    rec = record_from_json(j);
  } else {
    rec = resolve_knot(g, knot);
  }
  InferenceOptions opts;
  opts.nu_bound = nu_bound;
  auto res = apply_rules(rec, opts);
  if (g.format == Format::json_fmt) {
    json steps = json::array();
    for (const auto& d : res.derivations)
      steps.push_back({{"field", d.field},
                       {"before", d.before},
                       {"after", d.after},
                       {"rule", d.rule_id},
                       {"anchor", d.anchor}});
    json contras = json::array();
    for (const auto& c : res.contradictions)
      contras.push_back({{"rule", c.rule_id}, {"message", c.message}});
    std::cout << json{{"record", record_report(res.record)},
                      {"derivations", steps},
                      {"contradictions", contras},
                      {"statements", res.statements}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& d : res.derivations)
      std::cout << d.rule_id << "  " << d.field << ": " << d.before << " -> "
                << d.after << "  (" << d.anchor << ")\n";
    for (const auto& s : res.statements) std::cout << s << "\n";
    for (const auto& c : res.contradictions)
      std::cout << "CONTRADICTION [" << c.rule_id << "] " << c.message << "\n";
    if (res.consistent())
      std::cout << "enriched record: " << record_report(res.record).dump() << "\n";
  }
  return res.consistent() ? 0 : 2;
}

int cmd_verify_parity(Globals& g, int h_max, int k_max, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  auto res = parity_sweep(h_max, k_max, jobs);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (g.format == Format::json_fmt) {
    json fails = json::array();
    for (const auto& f : res.failures) {
      json ix = json::array();
      for (int i : f.ix.indices) ix.push_back(i);
      fails.push_back({{"h", f.ix.h}, {"indices", ix}});
    }
    std::cout << json{{"sets_checked", res.sets_checked},
                      {"failures", fails},
                      {"elapsed_ms", ms}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "checked " << res.sets_checked << " index sets (h <= " << h_max
              << ", k <= " << k_max << ") in " << ms << " ms: "
              << (res.pass() ? "all certificates hold" : "FAILURES") << "\n";
    for (const auto& f : res.failures) {
      std::cout << "  FAIL h=" << f.ix.h << " indices=(";
      for (size_t i = 0; i < f.ix.indices.size(); ++i)
        std::cout << (i ? "," : "") << f.ix.indices[i];
      std::cout << ")\n";
    }
  }
  return res.pass() ? 0 : 2;
}

int cmd_verify_identities(Globals& g, int h_max) {
  long long checks = 0, failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      std::cout << "FAIL: " << what << "\n";
    }
  };
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= 30; ++k)
      expect(hockey_stick(m, k), "hockey stick m=" + std::to_string(m) +
                                     " k=" + std::to_string(k));
  for (int h = 1; h <= h_max; ++h) {
    for (int i = -h; i <= h; ++i)
      expect(d_coeff(2, i, h) == i, "d(2,i) = i at h=" + std::to_string(h));
    for (int j = 2; j <= 2 * h + 1; ++j)
      for (int i = -h; i < h; ++i)
        expect(d_coeff(j, i + 1, h) - d_coeff(j, i, h) ==
                   d_coeff(j - 1, i, h) + binomial(h - i - 1, j - 2),
               "difference recurrence h=" + std::to_string(h));
    for (int n = 2; n <= 2 * h + 1; ++n)
      for (int j = -h; j <= h; ++j) {
        BigInt alt = 0;
        int sign = 1;
        for (int i = j + 1; i <= h - n + 1; ++i) {
          alt += sign * binomial(h - i, n - 1);
          sign = -sign;
        }
        expect(alt == c_coeff(n, j, h), "telescoping sum h=" + std::to_string(h));
      }
    if (h <= 8) {
      for (int j = 0; j <= 2 * h + 1; ++j) {
        try {
          p_poly(j, h);  // self-certifying
          ++checks;
        } catch (const std::logic_error& e) {
          ++checks;
          ++failures;
          std::cout << "FAIL: p_poly j=" << j << " h=" << h << ": " << e.what()
                    << "\n";
        }
      }
      for (int n = 2; n <= 2 * h + 1; ++n) {
        IntMatrix power = pathcount_power(h, n);
        bool ok = true;
        for (int i = 1; i <= 2 * h; ++i)
          for (int j = 1; j <= 2 * h; ++j)
            if (power.at(i - 1, j - 1) != binomial(i - j - 1, n - 2)) ok = false;
        expect(ok, "path count closed form h=" + std::to_string(h) +
                       " n=" + std::to_string(n));
      }
      expect(pathcount_power(h, 1) == IntMatrix::identity(2 * h),
             "path count n=1 identity");
    }
    for (int n = 1; n <= 2 * h + 1; ++n) {
      auto v = v_coeffs(h, n);
      bool ok = true;
      for (int i = -h; i <= h; ++i)
        if (i > h - (n - 1) && v[i + h] != 0) ok = false;
      expect(ok, "v-coefficient support h=" + std::to_string(h));
    }
  }
  if (g.format == Format::json_fmt)
    std::cout << json{{"checks", checks}, {"failures", failures}}.dump(2) << "\n";
  else
    std::cout << checks << " identity checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 2;
}

int cmd_graded_solve(Globals& g, int dim_zero) {
  auto sols = solve_section9(dim_zero);
  if (g.format == Format::json_fmt) {
    json arr = json::array();
    for (const auto& s : sols)
      arr.push_back({{"k", s.k},
                     {"m", s.m},
                     {"minus_one", s.minus_one.d},
                     {"plus_one", s.plus_one.d},
                     {"zero", s.zero.d}});
    std::cout << json{{"dim_zero", dim_zero}, {"solutions", arr}}.dump(2) << "\n";
  } else {
    std::cout << sols.size() << " grading solution(s) for zero-surgery dimension "
              << dim_zero << ":\n";
    for (const auto& s : sols)
      std::cout << "  k=" << s.k << " m=" << s.m << "  I#(-1)=" << to_string(s.minus_one)
                << "  I#(+1)=" << to_string(s.plus_one) << "  I#(0)="
                << to_string(s.zero) << "\n";
  }
  return 0;
}

int cmd_section9(Globals& g, int dim_zero, long long alexander_a, bool has_a) {
  auto rep = section9_contradiction(
      dim_zero, has_a ? std::optional<long long>(alexander_a) : std::nullopt);
  if (g.format == Format::json_fmt) {
    std::cout << json{{"contradiction", rep.contradiction},
                      {"alexander_a", rep.alexander_a},
                      {"lower_bound", rep.lower_bound},
                      {"feasible_dims", rep.feasible_dims},
                      {"steps", rep.steps}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& s : rep.steps) std::cout << "- " << s << "\n";
    std::cout << (rep.contradiction ? "=> contradiction" : "=> consistent") << "\n";
  }
  return rep.contradiction ? 2 : 0;
}

int cmd_db_import(Globals&, const std::string& src, const std::string& out,
                  bool force) {
  Database db = load_database(src, force);
  if (out.empty())
    std::cout << database_to_json(db).dump(2) << "\n";
  else
    save_database(db, out);
  std::cerr << "imported " << db.records.size() << " records\n";
  return 0;
}

int cmd_db_export(Globals& g, const std::string& out) {
  auto& db = g.database();
  if (out.empty())
    std::cout << database_to_json(db).dump(2) << "\n";
  else
    save_database(db, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of framed instanton surgery invariants"};
  app.require_subcommand(1);

  Globals g;
  std::string format = "human";
  app.add_option("--format", format, "output format: human, tsv or json");
  app.add_option("--db", g.db_path, "knot database JSON file (default: built-in)");

  // dim
  std::string knot, slope, bundle = "trivial", range;
  auto* dim = app.add_subcommand("dim", "dimension of one surgery");
  dim->add_option("knot", knot)->required();
  dim->add_option("slope", slope)->required();
  dim->add_option("--bundle", bundle, "trivial or meridional");

  auto* table = app.add_subcommand("table", "dimensions over a slope range");
  table->add_option("knot", knot)->required();
  table->add_option("slopes", range, "a..b or comma-separated slopes")->required();
  table->add_option("--bundle", bundle);

  int D = 0;
  bool include_exceptional = false, khovanov = false;
  auto* bound = app.add_subcommand("bound", "denominator bound for a total dimension");
  bound->add_option("D", D)->required();
  bound->add_flag("--include-exceptional", include_exceptional,
                  "allow r0 < 3 (unknot, trefoils, figure eight)");
  bound->add_flag("--khovanov", khovanov,
                  "interpret D as the Khovanov-side dimension bound");

  int nu = 0, r0 = 0;
  auto* classify = app.add_subcommand("classify", "what (nu_sharp, r0) forces");
  classify->add_option("nu", nu)->required();
  classify->add_option("r0", r0)->required();

  std::vector<std::string> summands;
  auto* sum = app.add_subcommand("sum", "invariants of a connected sum");
  sum->add_option("knots", summands, "names; prefix ~ mirrors a summand")
      ->required()
      ->expected(-1);

  std::string knot_b;
  auto* comp = app.add_subcommand("compare", "order two knots via epsilon_sharp");
  comp->add_option("left", knot)->required();
  comp->add_option("right", knot_b)->required();

  int nu_bound = 99;
  auto* infer = app.add_subcommand("infer", "run the rule chase on a record");
  infer->add_option("knot", knot, "database name or a JSON record file")->required();
  infer->add_option("--nu-bound", nu_bound, "candidate interval half-width");

  int h_max = 6, k_max = 3, jobs = 1;
  auto* vp = app.add_subcommand("verify-parity",
                                "certify the rank and kernel claims per index set");
  vp->add_option("--h-max", h_max);
  vp->add_option("--k-max", k_max);
  vp->add_option("--jobs", jobs);

  int h_max_id = 10;
  auto* vi = app.add_subcommand("verify-identities",
                                "binomial and coefficient identity suite");
  vi->add_option("--h-max", h_max_id);

  int dim_zero = 2;
  auto* gs = app.add_subcommand("graded-solve", "grading constraint solutions");
  gs->add_option("--dim-zero", dim_zero);

  long long alexander_a = 2;
  auto* s9 = app.add_subcommand("section9", "graded constraint contradiction chase");
  s9->add_option("--dim-zero", dim_zero);
  auto* a_opt = s9->add_option("--alexander-a", alexander_a,
                               "override the genus-one Alexander coefficient");

  auto* db = app.add_subcommand("db", "database import and export");
  db->require_subcommand(1);
  std::string src, out;
  bool force = false;
  auto* dbi = db->add_subcommand("import", "validate and canonicalize a database");
  dbi->add_option("src", src)->required();
  dbi->add_option("--out", out);
  dbi->add_flag("--force", force, "skip consistency checks");
  auto* dbe = db->add_subcommand("export", "dump the active database");
  dbe->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    g.format = parse_format(format);
    if (dim->parsed()) return cmd_dim(g, knot, slope, bundle);
    if (table->parsed()) return cmd_table(g, knot, range, bundle);
    if (bound->parsed()) return cmd_bound(g, D, include_exceptional, khovanov);
    if (classify->parsed()) return cmd_classify(g, nu, r0);
    if (sum->parsed()) return cmd_sum(g, summands);
    if (comp->parsed()) return cmd_compare(g, knot, knot_b);
    if (infer->parsed()) return cmd_infer(g, knot, nu_bound);
    if (vp->parsed()) return cmd_verify_parity(g, h_max, k_max, jobs);
    if (vi->parsed()) return cmd_verify_identities(g, h_max_id);
    if (gs->parsed()) return cmd_graded_solve(g, dim_zero);
    if (s9->parsed()) return cmd_section9(g, dim_zero, alexander_a, a_opt->count() > 0);
    if (db->parsed()) {
      if (dbi->parsed()) return cmd_db_import(g, src, out, force);
      if (dbe->parsed()) return cmd_db_export(g, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "latticebound/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "latticebound/constructions.hpp"
#include "latticebound/report.hpp"
#include "latticebound/simplex_io.hpp"
#include "latticebound/survey2d.hpp"

namespace latticebound {

namespace {

using nlohmann::json;

struct Options {
  std::size_t dim = 0;
  std::size_t k = 0;
  std::string cap;
  std::string census;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t facet = 0;
  CLI::Option* dim_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* cap_opt = nullptr;
  CLI::Option* census_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* facet_opt = nullptr;
};

/// Signals a failed check; maps to exit status 1.
struct CheckFailed {
  std::string what;
};

std::string point_str(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

std::string point_str(const RatVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

class Harness {
 public:
  Harness(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Options opt;

  std::vector<SimplexRecord> records() {
    if (opt.census_opt->count() > 0) {
      std::ifstream f(opt.census);
      if (!f) throw CLI::ValidationError("--census", "cannot open '" + opt.census + "'");
      return parse_simplices(f);
    }
    return parse_simplices(in_);
  }

  std::size_t require(CLI::Option* o, std::size_t value, const char* name) {
    if (o->count() == 0) throw CLI::RequiredError(name);
    return value;
  }

  Rational cap_or(const Rational& fallback) {
    if (opt.cap_opt->count() == 0) return fallback;
    try {
      return parse_rational(opt.cap);
    } catch (const Error&) {
      throw CLI::ValidationError("--cap", "expected a rational, got '" + opt.cap + "'");
    }
  }

  std::vector<Face> selected_facets(const LatticeSimplex& s) {
    auto fs = facets(s);
    if (opt.facet_opt->count() == 0) return fs;
    if (opt.facet >= fs.size()) throw CLI::ValidationError("--facet", "index out of range");
    return {fs[opt.facet]};
  }

  std::string heading(const SimplexRecord& r, std::size_t i) {
    return "== " + (r.label ? *r.label : "record " + std::to_string(i + 1)) + " ==\n";
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  // construct ---------------------------------------------------------------

  void construct(const std::string& which) {
    LatticeSimplex s = [&] {
      if (which == "zpw") {
        const auto d = require(opt.dim_opt, opt.dim, "--dim");
        return zpw_simplex(d, require(opt.k_opt, opt.k, "--k"));
      }
      if (which == "t") return t_simplex(require(opt.dim_opt, opt.dim, "--dim"));
      if (which == "exceptional") return exceptional_p31();
      auto base = records();
      if (base.size() != 1) throw CLI::ValidationError("lift", "expected exactly one base simplex on input");
      return lift(base.front().simplex, require(opt.k_opt, opt.k, "--k"));
    }();
    if (opt.seed_opt->count() > 0) s = apply(random_unimodular(s.dim(), opt.seed, 3), s);
    if (opt.json) {
      emit({{"schemaVersion", kSchemaVersion},
            {"dim", s.dim()},
            {"vertices", to_json(s)},
            {"volume", to_json(volume(s))}});
    } else {
      out_ << format_simplex(s) << "# volume: " << to_string(volume(s)) << "\n";
    }
  }

  // count -------------------------------------------------------------------

  void count(const std::string& which) {
    const auto recs = records();
    json all = json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& s = recs[i].simplex;
      json j{{"label", recs[i].label ? json(*recs[i].label) : json(nullptr)}};
      if (!opt.json) out_ << heading(recs[i], i);
      if (which == "interior") {
        const auto pts = interior_points(s);
        j["count"] = pts.size();
        j["points"] = json::array();
        for (const auto& p : pts) j["points"].push_back(to_json(p));
        if (!opt.json) {
          out_ << "interior: " << pts.size() << "\n";
          for (const auto& p : pts) out_ << "  " << point_str(p) << "\n";
        }
      } else {
        j["facets"] = json::array();
        for (const auto& f : selected_facets(s)) {
          const auto pts = relint_points(f);
          json fj{{"omittedVertex", f.omitted_vertex()}, {"count", pts.size()}, {"points", json::array()}};
          for (const auto& p : pts) fj["points"].push_back(to_json(p));
          j["facets"].push_back(std::move(fj));
          if (!opt.json) {
            out_ << "facet " << f.omitted_vertex() << ": " << pts.size() << "\n";
            for (const auto& p : pts) out_ << "  " << point_str(p) << "\n";
          }
        }
      }
      all.push_back(std::move(j));
    }
    if (opt.json) emit({{"schemaVersion", kSchemaVersion}, {"records", std::move(all)}});
  }

  // bound -------------------------------------------------------------------

  void bound(const std::string& which) {
    const auto recs = records();
    json all = json::array();
    bool failed = false;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& s = recs[i].simplex;
      const Rational vol = volume(s);
      json j{{"label", recs[i].label ? json(*recs[i].label) : json(nullptr)}, {"volume", to_json(vol)}};
      if (!opt.json) out_ << heading(recs[i], i) << "volume: " << to_string(vol) << "\n";

      if (which == "facet" || which == "vdc") {
        j["facets"] = json::array();
        const bool explicit_facet = opt.facet_opt->count() > 0;
        for (const auto& f : selected_facets(s)) {
          // an explicitly requested facet must qualify; otherwise skip the others
          if (!explicit_facet && relint_points(f).size() != 1) continue;
          const std::size_t idx = f.omitted_vertex();
          if (which == "facet") {
            const auto b = facet_bound(s, f);
            j["facets"].push_back({{"omittedVertex", idx},
                                   {"relintPoint", to_json(b.relint_point)},
                                   {"betas", to_json_vec(b.betas)},
                                   {"bound", to_json(b.bound)},
                                   {"tight", b.tight}});
            if (!opt.json) {
              out_ << "facet " << idx << ": x=" << point_str(b.relint_point) << " betas=" << point_str(b.betas)
                   << " bound=" << to_string(b.bound) << (b.tight ? " tight" : "") << "\n";
            }
          } else {
            const auto trace = proof_trace(s, f);
            const auto v = vdc_check(trace.lattice, trace.box);
            failed = failed || !v.holds;
            j["facets"].push_back({{"omittedVertex", idx},
                                   {"lhs", to_json(v.lhs)},
                                   {"rhs", to_json(v.rhs)},
                                   {"points", v.points.size()},
                                   {"holds", v.holds},
                                   {"tight", v.tight}});
            if (!opt.json) {
              out_ << "facet " << idx << ": vol(B)=" << to_string(v.lhs) << " rhs=" << to_string(v.rhs)
                   << " |Y|=" << v.points.size() << (v.holds ? " holds" : " FAILS") << (v.tight ? " tight" : "")
                   << "\n";
            }
          }
        }
        if (j["facets"].empty() && !opt.json) out_ << "no facet with exactly one relative-interior point\n";
      } else if (which == "pikhurko") {
        const auto p = pikhurko(s);
        json pts = json::array();
        for (const auto& [x, e] : p.per_point) {
          pts.push_back({{"point", to_json(x)}, {"betas", to_json_vec(e.sorted_betas)}, {"bound", to_json(e.bound)}});
          if (!opt.json) out_ << point_str(x) << ": bound=" << to_string(e.bound) << "\n";
        }
        j["points"] = std::move(pts);
        j["nu"] = to_json(p.nu);
        failed = failed || vol > p.nu;
        if (!opt.json) out_ << "nu: " << to_string(p.nu) << "\n";
      } else {
        const Rational t = tau(s);
        j["tau"] = to_json(t);
        if (!opt.json) out_ << "tau: " << to_string(t) << "\n";
      }
      all.push_back(std::move(j));
    }
    if (opt.json) emit({{"schemaVersion", kSchemaVersion}, {"records", std::move(all)}});
    if (failed) throw CheckFailed{"bound violated"};
  }

  static json to_json_vec(const RatVector& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
  }

  // certify -----------------------------------------------------------------

  void certify() {
    const auto recs = records();
    json all = json::array();
    bool failed = false;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& s = recs[i].simplex;
      if (!opt.json) out_ << heading(recs[i], i);
      std::vector<Face> tight;
      for (const auto& f : selected_facets(s)) {
        if (relint_points(f).size() == 1 && facet_bound(s, f).tight) tight.push_back(f);
      }
      if (tight.empty()) throw ApplicabilityError("no facet attains the facet bound");
      for (const auto& f : tight) {
        const auto c = equality_certificate(s, f);
        failed = failed || !c.collinear_ok || !c.edge_ok;
        json cj{{"label", recs[i].label ? json(*recs[i].label) : json(nullptr)},
                {"omittedVertex", f.omitted_vertex()},
                {"lineDirection", to_json_vec(c.line_direction)},
                {"collinearOk", c.collinear_ok},
                {"edgeOk", c.edge_ok}};
        cj["parallelEdge"] = c.parallel_edge ? json{c.parallel_edge->first, c.parallel_edge->second} : json(nullptr);
        all.push_back(std::move(cj));
        if (!opt.json) {
          out_ << "facet " << f.omitted_vertex() << ": direction=" << point_str(c.line_direction);
          if (c.parallel_edge) out_ << " edge=" << c.parallel_edge->first << "-" << c.parallel_edge->second;
          out_ << " collinear=" << (c.collinear_ok ? "ok" : "FAIL") << " edge=" << (c.edge_ok ? "ok" : "FAIL")
               << "\n";
        }
      }
    }
    if (opt.json) emit({{"schemaVersion", kSchemaVersion}, {"certificates", std::move(all)}});
    if (failed) throw CheckFailed{"equality certificate failed"};
  }

  // canon, survey2d, ingest, report, verify ---------------------------------

  void canon() {
    const auto recs = records();
    json all = json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto enc = canonical_form(recs[i].simplex).encoding();
      all.push_back({{"label", recs[i].label ? json(*recs[i].label) : json(nullptr)}, {"canonicalForm", enc}});
      if (!opt.json) out_ << (recs[i].label ? *recs[i].label + " " : "") << enc << "\n";
    }
    if (opt.json) emit({{"schemaVersion", kSchemaVersion}, {"records", std::move(all)}});
  }

  void survey() {
    const auto k = require(opt.k_opt, opt.k, "--k");
    const auto census = enumerate_triangles(k, cap_or(default_cap(k)));
    if (opt.json) {
      json reps = json::array();
      for (std::size_t i = 0; i < census.representatives.size(); ++i) {
        reps.push_back({{"vertices", to_json(census.representatives[i])},
                        {"canonicalForm", census.forms[i].encoding()},
                        {"area", to_json(volume(census.representatives[i]))}});
      }
      emit({{"schemaVersion", kSchemaVersion},
            {"k", k},
            {"cap", to_json(census.search_cap)},
            {"count", census.representatives.size()},
            {"maxArea", to_json(census.max_area)},
            {"representatives", std::move(reps)}});
    } else {
      out_ << format_census(census);
    }
  }

  void ingest() {
    if (opt.census_opt->count() == 0) throw CLI::RequiredError("--census");
    const auto recs = ingest_census(opt.census, require(opt.k_opt, opt.k, "--k"));
    if (opt.json)
      emit({{"schemaVersion", kSchemaVersion}, {"records", recs.size()}});
    else
      out_ << "ingested " << recs.size() << " records\n";
  }

  void outlook() {
    const auto k = require(opt.k_opt, opt.k, "--k");
    const std::size_t d = opt.dim_opt->count() > 0 ? opt.dim : 3;
    if (opt.census_opt->count() == 0) throw CLI::RequiredError("--census");
    const auto report = outlook_report(ingest_census(opt.census, k), d, k);
    emit(to_json(report));
    for (const auto& r : report.details)
      if (!r.sound()) throw CheckFailed{"unsound bound report"};
  }

  void verify_main2d() {
    const auto k = require(opt.k_opt, opt.k, "--k");
    const auto r = verify_theorem_main_2d(k, cap_or(default_cap(k)));
    if (opt.json) {
      emit({{"schemaVersion", kSchemaVersion},
            {"k", r.k},
            {"cap", to_json(r.cap)},
            {"censusSize", r.census_size},
            {"filteredSize", r.filtered_size},
            {"unfilteredMaxArea", to_json(r.unfiltered_max_area)},
            {"unfilteredMaximizers", r.unfiltered_maximizers},
            {"maxArea", to_json(r.max_area)},
            {"expectedArea", to_json(r.expected_area)},
            {"unique", r.unique},
            {"equivalentToZpw", r.equivalent_to_zpw},
            {"passed", r.passed}});
    } else {
      out_ << "k: " << r.k << "\n"
           << "cap: " << to_string(r.cap) << "\n"
           << "triangles: " << r.census_size << "\n"
           << "with a one-point edge: " << r.filtered_size << "\n"
           << "max area (all): " << to_string(r.unfiltered_max_area) << " (" << r.unfiltered_maximizers
           << " maximizer" << (r.unfiltered_maximizers == 1 ? "" : "s") << ")\n"
           << "max area (one-point edge): " << to_string(r.max_area) << "\n"
           << "expected: " << to_string(r.expected_area) << "\n"
           << "unique: " << (r.unique ? "yes" : "no") << "\n"
           << "equivalent to S_{2," << r.k << "}: " << (r.equivalent_to_zpw ? "yes" : "no") << "\n"
           << (r.passed ? "PASS" : "FAIL") << "\n";
    }
    if (!r.passed) throw CheckFailed{"maximizer check failed"};
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Harness h(in, out);
  auto& o = h.opt;

  CLI::App app{"Exact lattice-simplex volume bounds", "latticebound"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "dimension d");
    sub->add_option("--k", o.k, "number of interior lattice points");
    sub->add_option("--cap", o.cap, "area cap of the triangle search (rational)");
    sub->add_option("--census", o.census, "simplex text file (default: stdin)");
    sub->add_flag("--json", o.json, "print JSON instead of text");
    sub->add_option("--seed", o.seed, "apply a seeded random unimodular map to the constructed simplex");
    sub->add_option("--facet", o.facet, "facet index, i.e. the omitted vertex");
  };

  std::function<void()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    add_common(sub);
    // every leaf registers its own copies of the flags; bind the parsed ones
    sub->callback([&o, &action, fn, sub] {
      o.dim_opt = sub->get_option("--dim");
      o.k_opt = sub->get_option("--k");
      o.cap_opt = sub->get_option("--cap");
      o.census_opt = sub->get_option("--census");
      o.seed_opt = sub->get_option("--seed");
      o.facet_opt = sub->get_option("--facet");
      action = fn;
    });
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };

  auto* construct = group("construct", "print a named simplex and its volume");
  const std::vector<std::pair<std::string, std::string>> constructs{
      {"zpw", "extremal simplex S_{d,k}"},
      {"t", "T_d, one interior point"},
      {"exceptional", "conv(o,2e1,6e2,6e3)"},
      {"lift", "lift the base simplex read from input"}};
  for (const auto& [w, help] : constructs) leaf(construct, w, help, [&h, w = w] { h.construct(w); });
  auto* count = group("count", "lattice points in the interior or facet relative interiors");
  leaf(count, "interior", "interior lattice points", [&h] { h.count("interior"); });
  leaf(count, "relint", "relative-interior lattice points per facet", [&h] { h.count("relint"); });
  auto* bound = group("bound", "volume bounds");
  const std::vector<std::pair<std::string, std::string>> bounds{
      {"facet", "bound from each facet with one relative-interior point"},
      {"pikhurko", "nu: minimum over interior points"},
      {"tau", "product of barycentric coordinates of the interior point"},
      {"vdc", "van der Corput check on each facet's proof lattice"}};
  for (const auto& [w, help] : bounds) leaf(bound, w, help, [&h, w = w] { h.bound(w); });
  auto* certify = group("certify", "equality-case certificates");
  leaf(certify, "equality", "line and parallel-edge structure of tight facets", [&h] { h.certify(); });
  leaf(&app, "canon", "canonical form under affine unimodular maps", [&h] { h.canon(); });
  leaf(&app, "survey2d", "census of lattice triangles with k interior points", [&h] { h.survey(); });
  leaf(&app, "ingest", "validate a census file", [&h] { h.ingest(); });
  auto* report = group("report", "census reports");
  leaf(report, "outlook", "facet-bound and nu statistics as JSON", [&h] { h.outlook(); });
  auto* verify = group("verify", "bounded theorem checks");
  leaf(verify, "main2d", "unique area maximizer among triangles with a one-point edge", [&h] { h.verify_main2d(); });

  // CLI11 consumes the argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    action();
    return kExitOk;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what << "\n";
    return kExitVerification;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const DataIntegrityError& e) {
    err << "data integrity: " << e.what() << "\n";
    return kExitVerification;
  } catch (const ApplicabilityError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace latticebound

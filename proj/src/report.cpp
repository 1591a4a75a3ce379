#include "latticebound/report.hpp"

#include <algorithm>
#include <numeric>

#include "latticebound/constructions.hpp"
#include "latticebound/parallel.hpp"

namespace latticebound {

using nlohmann::json;

bool BoundReport::sound() const {
  for (const auto& f : facets) {
    if (f.bound && volume > f.bound->bound) return false;
    if (f.vdc && !f.vdc->holds) return false;
  }
  if (pikhurko && volume > pikhurko->nu) return false;
  return true;
}

BoundReport make_bound_report(const LatticeSimplex& s, std::optional<std::string> label) {
  BoundReport r{std::move(label), s, canonical_form(s), volume(s), interior_points(s).size(), {}, {}, {}, {}, false};
  const auto fs = facets(s);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    FacetReport fr;
    fr.omitted_vertex = i;
    fr.relint_count = relint_points(fs[i]).size();
    if (fr.relint_count == 1) {
      r.in_sk1 = true;
      fr.bound = facet_bound(s, fs[i]);
      fr.trace = proof_trace(s, fs[i]);
      fr.vdc = vdc_check(fr.trace->lattice, fr.trace->box);
      if (fr.bound->tight && r.interior_count >= 1) fr.certificate = equality_certificate(s, fs[i]);
      if (!r.best_facet_bound || fr.bound->bound < *r.best_facet_bound) r.best_facet_bound = fr.bound->bound;
    }
    r.facets.push_back(std::move(fr));
  }
  if (r.interior_count >= 1) r.pikhurko = pikhurko(s);
  if (r.interior_count == 1) r.tau = tau(s);
  return r;
}

OutlookReport outlook_report(const std::vector<SimplexRecord>& census, std::size_t dim, std::size_t k) {
  OutlookReport out;
  out.dim = dim;
  out.k = k;
  out.threshold = zpw_volume(dim, k);
  out.total = census.size();

  for (const auto& rec : census) {
    if (rec.simplex.dim() != dim) {
      throw DimensionError("record at line " + std::to_string(rec.line) + " has dimension " +
                           std::to_string(rec.simplex.dim()) + ", expected " + std::to_string(dim));
    }
  }

  std::vector<std::optional<BoundReport>> slots(census.size());
  parallel_for(census.size(), [&](std::size_t i) { slots[i] = make_bound_report(census[i].simplex, census[i].label); });

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]->interior_count != k) {
      throw DataIntegrityError("record at line " + std::to_string(census[i].line) + " has " +
                               std::to_string(slots[i]->interior_count) + " interior lattice points, expected " +
                               std::to_string(k));
    }
    out.details.push_back(std::move(*slots[i]));
  }
  std::stable_sort(out.details.begin(), out.details.end(),
                   [](const BoundReport& a, const BoundReport& b) { return a.canonical < b.canonical; });

  for (const auto& d : out.details) {
    if (d.in_sk1) ++out.in_sk1;
    if (d.pikhurko && d.pikhurko->nu > out.threshold) ++out.nu_exceeds;
  }
  return out;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const LatticePoint& p) {
  json a = json::array();
  for (const auto& v : p) a.push_back(to_string(v));
  return a;
}

namespace {

json rat_vector(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json facet_json(const FacetReport& f) {
  json j{{"omittedVertex", f.omitted_vertex}, {"relintCount", f.relint_count}};
  if (f.bound) {
    j["relintPoint"] = to_json(f.bound->relint_point);
    j["betas"] = rat_vector(f.bound->betas);
    j["bound"] = to_json(f.bound->bound);
    j["tight"] = f.bound->tight;
  }
  if (f.trace) {
    j["proofTrace"] = {{"latticeDet", to_json(f.trace->lattice.det())},
                       {"ySize", f.trace->y_set.size()},
                       {"hMinusCount", f.trace->h_minus_count},
                       {"hZeroCount", f.trace->h_zero_count},
                       {"hPlusCount", f.trace->h_plus_count}};
  }
  if (f.vdc) {
    j["vdc"] = {{"lhs", to_json(f.vdc->lhs)},
                {"rhs", to_json(f.vdc->rhs)},
                {"holds", f.vdc->holds},
                {"tight", f.vdc->tight}};
  }
  if (f.certificate) {
    json c{{"lineDirection", rat_vector(f.certificate->line_direction)},
           {"collinearOk", f.certificate->collinear_ok},
           {"edgeOk", f.certificate->edge_ok}};
    if (f.certificate->parallel_edge)
      c["parallelEdge"] = {f.certificate->parallel_edge->first, f.certificate->parallel_edge->second};
    else
      c["parallelEdge"] = nullptr;
    j["equalityCertificate"] = std::move(c);
  }
  return j;
}

}  // namespace

json to_json(const LatticeSimplex& s) {
  json a = json::array();
  for (const auto& v : s.vertices()) a.push_back(to_json(v));
  return a;
}

json to_json(const BoundReport& r) {
  json j;
  j["label"] = r.label ? json(*r.label) : json(nullptr);
  j["dim"] = r.simplex.dim();
  j["vertices"] = to_json(r.simplex);
  j["canonicalForm"] = r.canonical.encoding();
  j["volume"] = to_json(r.volume);
  j["interiorCount"] = r.interior_count;
  json fs = json::array();
  for (const auto& f : r.facets) fs.push_back(facet_json(f));
  j["facets"] = std::move(fs);
  j["bestFacetBound"] = r.best_facet_bound ? to_json(*r.best_facet_bound) : json(nullptr);
  j["nu"] = r.pikhurko ? to_json(r.pikhurko->nu) : json(nullptr);
  j["tau"] = r.tau ? to_json(*r.tau) : json(nullptr);
  j["inSk1"] = r.in_sk1;
  j["sound"] = r.sound();
  return j;
}

json to_json(const OutlookReport& r) {
  json details = json::array();
  for (const auto& d : r.details) details.push_back(to_json(d));
  return json{{"schemaVersion", kSchemaVersion},
              {"dim", r.dim},
              {"k", r.k},
              {"threshold", to_json(r.threshold)},
              {"total", r.total},
              {"inSk1", r.in_sk1},
              {"nuExceeds", r.nu_exceeds},
              {"details", std::move(details)}};
}

}  // namespace latticebound

#include "trilinear/report.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "trilinear/cohomology.hpp"
#include "trilinear/hilbert_burch.hpp"
#include "trilinear/schur.hpp"

namespace trilinear {

namespace {

Json points_json(const std::vector<PlanePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.to_string());
  return out;
}

Json matrix_json(const DenseMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

struct Outcome {
  std::string status;  // pass | fail | skipped
  std::string reason;
  Json detail = Json::object();
};

Outcome pass(Json detail) { return {"pass", "", std::move(detail)}; }
Outcome fail(std::string reason, Json detail = Json::object()) { return {"fail", std::move(reason), std::move(detail)}; }
Outcome skipped(std::string reason) { return {"skipped", std::move(reason), Json::object()}; }

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "main_assumption", "det_cubics", "cubic_rank_gate", "involution_roundtrip", "base_points",
      "schur", "double_six", "cohomology", "multiplication", "degeneracy_locus",
  };
  return names;
}

Json moduli_count() {
  const long tensors = 3 * 3 * 4 - 1;
  const long group = 3 * 3 + 3 * 3 - 2;
  return Json{{"tensor_space_dim", tensors},
              {"group_dim", group},
              {"moduli_dim", tensors - group},
              {"line", std::to_string(tensors) + " - " + std::to_string(group) + " = " + std::to_string(tensors - group)}};
}

AnalysisResult analyze(const TriTensor& t, const AnalyzeOptions& options) {
  if (!t.is_334()) throw InputError("analyze needs a (3,3,4) tensor");
  for (const auto& s : options.skip) {
    if (std::find(check_names().begin(), check_names().end(), s) == check_names().end()) {
      throw InputError("unknown check '" + s + "' in --skip");
    }
  }
  if (!is_prime_u64(options.scan_prime) || options.scan_prime > 2000) {
    throw InputError("--scan-prime must be a prime below 2000");
  }
  const std::uint32_t p = t.field().is_prime() ? t.field().modulus() : options.scan_prime;
  const bool small_field = p <= 2000;

  std::map<std::string, Outcome> results;
  std::map<std::string, double> elapsed;
  auto ok = [&](const std::string& name) { return results.count(name) && results.at(name).status == "pass"; };

  // Runs a check unless skipped by the user or by a failed prerequisite.
  auto run = [&](const std::string& name, const std::vector<std::string>& needs, const std::function<Outcome()>& body) {
    if (options.skip.count(name)) {
      results[name] = skipped("requested with --skip");
      return;
    }
    for (const auto& n : needs) {
      if (!ok(n)) {
        const auto& up = results.at(n);
        results[name] = skipped("upstream " + n + " " + up.status + (up.reason.empty() ? "" : ": " + up.reason));
        return;
      }
    }
    auto start = std::chrono::steady_clock::now();
    try {
      results[name] = body();
    } catch (const std::exception& e) {
      results[name] = fail(std::string("error: ") + e.what());
    }
    elapsed[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  bool smooth_gate = false;
  bool complete_rational = false;
  std::optional<SchurQuadric> quadric;
  KernelBundleModel model(t);

  run("main_assumption", {}, [&] {
    std::size_t r = rank(contraction_matrix(t));
    Json d{{"contraction_rank", r}};
    return r == 9 ? pass(d) : fail("contraction rank " + std::to_string(r) + " < 9: degenerate tensor", d);
  });

  run("det_cubics", {"main_assumption"}, [&] {
    Json d{{"cubic", det_cubic(t).to_string()}};
    try {
      d["reversing_cubic"] = det_cubic(reversing_construction(t)).to_string();
    } catch (const MainAssumptionFailure& e) {
      d["reversing_cubic"] = "degenerate: " + std::string(e.what());
    }
    return pass(d);
  });

  run("cubic_rank_gate", {"main_assumption"}, [&] {
    auto scan = min_slice_rank_scan(t, 2, p);
    smooth_gate = scan.min_rank >= 2;
    Json d{{"scan_field", Field::prime(p).name()}, {"min_slice_rank", scan.min_rank}, {"smooth_checks", smooth_gate}};
    if (scan.witness) d["witness"] = scan.witness->to_string();
    return pass(d);
  });

  run("involution_roundtrip", {"main_assumption"}, [&] {
    auto first = cross_product_involution(t);
    std::size_t r2 = rank(contraction_matrix(first.bprime));
    if (r2 < 9) {
      return Outcome{"skipped",
                     "cross-product image is degenerate: contraction rank " + std::to_string(r2) + " < 9",
                     Json{{"image_contraction_rank", r2}}};
    }
    auto second = cross_product_involution(first.bprime);
    bool same = second.uprime_basis == u_subspace(t);
    Json d{{"orientation", first.orientation}, {"u_double_prime_equals_u", same}};
    return same ? pass(d) : fail("U'' differs from U", d);
  });

  run("base_points", {"main_assumption", "cubic_rank_gate"}, [&] {
    if (!smooth_gate) return skipped("slice rank drops to 1: cubic is singular");
    Json d;
    bool within = true;
    complete_rational = true;
    for (Side side : {Side::U, Side::W}) {
      auto bp = base_points(t, side, BasePointMode::minors());
      within = within && bp.points.size() <= 6;
      complete_rational = complete_rational && bp.complete && bp.points.size() == 6;
      Json s{{"points", points_json(bp.points)}, {"complete", bp.complete}, {"mode", bp.mode}};
      if (!bp.note.empty()) s["note"] = bp.note;
      d[side_name(side)] = s;
    }
    return within ? pass(d) : fail("more than 6 base points on one side", d);
  });

  run("schur", {"main_assumption", "cubic_rank_gate"}, [&] {
    if (!smooth_gate) return skipped("slice rank drops to 1: cubic is singular");
    DenseMatrix sm = schur_map(t);
    std::size_t r = rank(sm);
    Json d{{"schur_map_rank", r}, {"kernel_dim", 10 - r}};
    if (r != 9) return fail("Schur map has rank " + std::to_string(r), d);
    quadric = schur_quadric(t);
    d["q"] = matrix_json(quadric->q);
    d["nondegenerate"] = quadric->nondegenerate;
    if (!quadric->nondegenerate) return fail("Schur quadric is degenerate", d);
    bool carries = schur_carries_u_to_uprime(t);
    bool invariant = schur_quadric(trivial_involution(t)).q == quadric->q;
    auto cc = cubic_correspondence_check(t);
    bool dual = reversed_quadric_is_dual(t);
    d["carries_u_to_uprime"] = carries;
    d["invariant_under_trivial_involution"] = invariant;
    d["cubic_convention"] = cc.ok ? cc.convention : "none";
    d["reversed_quadric_is_dual"] = dual;
    bool all = carries && invariant && cc.ok && dual;
    return all ? pass(d) : fail("Schur quadric property failed", d);
  });

  run("double_six", {"base_points", "schur"}, [&] {
    std::optional<DoubleSix> ds;
    std::string where;
    if (complete_rational) {
      ds = double_six(t, BasePointMode::minors());
      where = "rational";
    } else if (small_field) {
      try {
        ds = double_six(t, BasePointMode::scan(p));
        where = "scan";
      } catch (const DoubleSixError& e) {
        return skipped(std::string("no double six over the available fields: ") + e.what());
      }
    } else {
      return skipped("base points are not rational and the field is too large to scan");
    }
    auto orth = orthogonality_check(*quadric, *ds);
    Json matching = Json::array();
    for (auto [z, w] : ds->matching) matching.push_back({z, w});
    Json d{{"field", ds->field.name()},
           {"source", where},
           {"matching", matching},
           {"exact_zeros", orth.exact_zeros},
           {"cross_pair_nonzero", orth.cross_pair_nonzero}};
    if (!orth.violations.empty()) d["violations"] = orth.violations;
    return orth.ok ? pass(d) : fail("matched lines are not orthogonal for the dual quadric", d);
  });

  run("cohomology", {"main_assumption"}, [&] {
    auto table = cohomology_table(model, -6, 4);
    Json rows = Json::array();
    bool chi_ok = true;
    for (const auto& r : table.rows) {
      Json prov = Json::array();
      for (auto pv : r.provenance) prov.push_back(provenance_name(pv));
      rows.push_back({{"n", r.n}, {"h", r.h}, {"chi", r.chi}, {"provenance", prov}});
      chi_ok = chi_ok && r.alternating_sum() == r.chi;
    }
    bool minimal = table.minimal_cohomology();
    Json d{{"rows", rows}, {"minimal_cohomology", minimal}, {"chi_identity", chi_ok}};
    if (!minimal) return fail("cohomology is not minimal", d);
    return chi_ok ? pass(d) : fail("h0 - h1 + h2 - h3 differs from chi", d);
  });

  run("multiplication", {"main_assumption"}, [&] {
    auto mc = multiplication_check(model);
    Json d{{"recovered_equals_input", mc.ok}};
    return mc.ok ? pass(d) : fail(mc.diagnostic, d);
  });

  run("degeneracy_locus", {"cohomology", "cubic_rank_gate"}, [&] {
    if (!smooth_gate) return skipped("slice rank drops to 1: cubic is singular");
    if (!small_field) return skipped("field too large to scan");
    auto dl = degeneracy_locus_check(model, p);
    Json d{{"scan_field", Field::prime(p).name()},
           {"points", dl.points},
           {"degenerate", dl.degenerate},
           {"on_cubic", dl.on_cubic},
           {"mismatches", dl.mismatches},
           {"jumping", dl.jumping}};
    if (!dl.convention.empty()) d["convention"] = dl.convention;
    return dl.ok ? pass(d) : fail("degeneracy locus differs from the reversing cubic", d);
  });

  AnalysisResult out;
  Json checks = Json::object();
  std::size_t passed = 0, failed = 0, skipped_count = 0;
  for (const auto& [name, r] : results) {
    Json c{{"status", r.status}, {"detail", r.detail}};
    if (!r.reason.empty()) c["reason"] = r.reason;
    if (elapsed.count(name)) c["elapsed_ms"] = elapsed.at(name);
    checks[name] = c;
    if (r.status == "pass") ++passed;
    if (r.status == "fail") ++failed;
    if (r.status == "skipped") ++skipped_count;
  }
  out.exit_code = failed == 0 ? 0 : 1;
  out.report = Json{{"schema", "analysis/1"},
                    {"tensor", tensor_to_json(t)},
                    {"scan_prime", p},
                    {"checks", checks},
                    {"moduli", moduli_count()},
                    {"summary",
                     {{"passed", passed}, {"failed", failed}, {"skipped", skipped_count},
                      {"status", failed == 0 ? "pass" : "fail"}}}};
  return out;
}

}  // namespace trilinear

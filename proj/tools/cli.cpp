#include "cli.hpp"

#include "CLI11.hpp"
#include "cyclocover/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifndef CYCLOCOVER_VERSION
#define CYCLOCOVER_VERSION "0.0.0"
#endif

namespace cyclocover::cli {

namespace {

using fermat::FermatCase;
using fermat::Workspace;

Json integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json invariants(const AbelianInvariants& a) {
  Json factors = Json::array();
  for (const auto& f : a.invariant_factors) factors.push_back(integer(f));
  return Json{{"invariant_factors", factors}, {"free_rank", a.free_rank}};
}

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

// ---------------------------------------------------------------------------
// Per-suite report builders

Json ranks_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_ranks(c, ws);
  return Json{{"pham_rank", r.pham_rank},
              {"expected_pham_rank", integer(r.expected_pham_rank)},
              {"quotient_rank", r.quotient_rank},
              {"expected_quotient_rank", integer(r.expected_quotient_rank)},
              {"invariant_rank", r.invariant_rank},
              {"quotient_free", r.quotient_free},
              {"exact_sequence", r.exact_sequence},
              {"pass", r.pass}};
}

Json lemma_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::invariants_two_ways(c, ws);
  return Json{{"module_side_rank", r.module_side_rank},
              {"ideal_side_rank", r.ideal_side_rank},
              {"expected_rank", integer(r.expected_rank)},
              {"equal", r.equal},
              {"pass", r.pass}};
}

Json compare_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_compare(c, ws);
  return Json{{"parity", r.odd ? "odd" : "even"},
              {"rank", r.rank},
              {"kernel", invariants(r.kernel)},
              {"cokernel", invariants(r.cokernel)},
              {"kernel_mod_d", invariants(r.kernel_mod_d)},
              {"cokernel_mod_d", invariants(r.cokernel_mod_d)},
              {"well_defined", r.well_defined},
              {"equivariant", r.equivariant},
              {"pass", r.pass}};
}

Json product_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_product_ideal(c, ws);
  return Json{{"applicable", r.applicable},
              {"product_equal", r.product_equal},
              {"annihilator_equal", r.annihilator_equal},
              {"pass", r.pass}};
}

Json main_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_main(c, ws);
  Json denom{{"intersection_in_sum", r.denominator.intersection_in_sum},
             {"sum_in_numerator", r.denominator.sum_in_numerator},
             {"equal", r.denominator.equal},
             {"sum_quotient_rank", r.denominator.sum_quotient_rank ? Json(*r.denominator.sum_quotient_rank)
                                                                   : Json(nullptr)},
             {"sum_rank_matches", r.denominator.sum_rank_matches}};
  Json out{{"parity", r.even ? "even" : "odd"},
           {"first_map", r.first_map},
           {"first_source", invariants(r.first_source)},
           {"first_target", invariants(r.first_target)},
           {"first_surjective", r.first_surjective},
           {"first_kernel", invariants(r.first_kernel)},
           {"first_kernel_order", integer(r.first_kernel_order)},
           {"kernel_cyclic_dividing_d", r.kernel_cyclic_dividing_d},
           {"second_map", r.second_map},
           {"second_injective", r.second_injective},
           {"commutes", r.commutes},
           {"certificates", r.certificates},
           {"generator_chase", r.generator_chase},
           {"top_right_denominator", denom}};
  if (r.point_oracle)
    out["point_oracle"] = Json{{"lattice_equal", r.point_oracle->lattice_equal},
                               {"kernel", invariants(r.point_oracle->kernel)},
                               {"cokernel", invariants(r.point_oracle->cokernel)},
                               {"agrees", r.point_oracle->agrees}};
  out["pass"] = r.pass;
  return out;
}

Json corollary_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_corollary(c, ws);
  return Json{{"applicable", r.applicable},
              {"expected_corner_dim", r.expected_corner_dim},
              {"bottom_left_dim", r.bottom_left_dim},
              {"bottom_right_dim", r.bottom_right_dim},
              {"expected_image_dim", r.expected_image_dim},
              {"top_image_dim", r.top_image_dim},
              {"bottom_image_dim", r.bottom_image_dim},
              {"pass", r.pass}};
}

Json complex_check(const FermatCase& c, Workspace& ws) {
  auto r = fermat::verify_complex(c, ws);
  Json h = Json::array();
  for (std::size_t k = 0; k < r.homology.size(); ++k)
    h.push_back(Json{{"degree", -static_cast<long>(k)}, {"group", invariants(r.homology[k])}});
  return Json{{"squares_to_zero", r.squares_to_zero}, {"homology", h}, {"pass", r.pass}};
}

using SuiteFn = std::function<Json(const FermatCase&, Workspace&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"cor-1.2", ranks_check},     {"lemma-4.1", lemma_check},  {"cor-4.2", compare_check},
      {"remark-4.3", product_check}, {"thm-3.1", main_check},     {"cor-3.2", corollary_check},
      {"cor-1.4", complex_check},
  };
  return table;
}

struct CaseResult {
  Json checks = Json::object();
  double seconds = 0;
};

CaseResult run_case(const FermatCase& c, const std::vector<std::string>& keys, std::size_t cap) {
  CaseResult out;
  const auto t0 = std::chrono::steady_clock::now();
  Workspace ws(c.d, cap);
  for (const auto& [key, fn] : suites()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) continue;
    try {
      out.checks[key] = fn(c, ws);
    } catch (const std::exception& e) {
      out.checks[key] = Json{{"error", e.what()}, {"pass", false}};
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty bound in range '" + text + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid range '" + text + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("invalid range '" + text + "'");
    return v;
  };
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

const std::vector<std::string>& suite_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& s : suites()) k.push_back(s.first);
    return k;
  }();
  return keys;
}

const std::vector<std::string>& lattice_keys() {
  static const std::vector<std::string> keys = {"e6-mod3", "e7-mod2", "pl-order", "pham-order",
                                                "quadratic-refinement"};
  return keys;
}

Json verify_report(const VerifySpec& spec) {
  std::vector<FermatCase> cases;
  for (int n = spec.n.lo; n <= spec.n.hi; ++n)
    for (int d = spec.d.lo; d <= spec.d.hi; ++d) cases.push_back({n, d});
  std::sort(cases.begin(), cases.end());
  for (const auto& c : cases) c.validate(spec.cap);
  const std::vector<std::string> keys = spec.suites.empty() ? suite_keys() : spec.suites;

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = run_case(cases[i], keys, spec.cap);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json report;
  report["schema"] = 1;
  report["version"] = CYCLOCOVER_VERSION;
  report["command"] = "verify";
  report["spec"] = Json{{"n", {spec.n.lo, spec.n.hi}}, {"d", {spec.d.lo, spec.d.hi}}, {"suites", keys}, {"cap", spec.cap}};
  Json case_list = Json::array();
  Json timings = Json::array();
  std::size_t checks = 0, passed = 0, cases_passed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    bool ok = true;
    for (const auto& [key, value] : results[i].checks.items()) {
      ++checks;
      if (value["pass"].get<bool>()) ++passed;
      else ok = false;
    }
    if (ok) ++cases_passed;
    case_list.push_back(Json{{"n", cases[i].n},
                             {"d", cases[i].d},
                             {"ambient_rank", cases[i].ambient_rank()},
                             {"checks", results[i].checks},
                             {"pass", ok}});
    timings.push_back(Json{{"n", cases[i].n}, {"d", cases[i].d}, {"seconds", results[i].seconds}});
  }
  report["cases"] = case_list;
  report["summary"] = Json{{"cases", cases.size()},
                           {"cases_passed", cases_passed},
                           {"checks", checks},
                           {"checks_passed", passed},
                           {"checks_failed", checks - passed}};
  report["pass"] = passed == checks;
  report["timings"] = timings;
  return report;
}

Json ranks_report(Range d, Range n) {
  if (d.lo < 2) throw std::invalid_argument("ranks: d must be >= 2");
  if (n.lo < 0) throw std::invalid_argument("ranks: n must be >= 0");
  Json entries = Json::array();
  bool ok = true;
  for (const auto& e : fermat::rank_table(d.hi, n.hi)) {
    if (e.d < d.lo || e.n < n.lo) continue;
    ok = ok && e.consistent;
    entries.push_back(Json{{"d", e.d},
                           {"n", e.n},
                           {"closed_form", integer(e.closed_form)},
                           {"recurrence", integer(e.recurrence)},
                           {"identity", e.identity},
                           {"printed_recurrence", e.plus_recurrence},
                           {"consistent", e.consistent}});
  }
  const auto half = fermat::half_ranks(6);
  const auto quoted = fermat::quoted_half_ranks();
  Json mismatches = Json::array();
  for (int k = 1; k <= 6; ++k)
    if (quoted[k - 1] != half[k]) mismatches.push_back(k);
  Json report;
  report["schema"] = 1;
  report["version"] = CYCLOCOVER_VERSION;
  report["command"] = "ranks";
  report["entries"] = entries;
  report["half_ranks_d3"] = integers(half);
  report["quoted_half_ranks"] = Json{{"values", integers(quoted)},
                                     {"count", quoted.size()},
                                     {"expected_count_for_n_1_to_6", 6},
                                     {"mismatched_n", mismatches},
                                     {"matches", quoted.size() == 6 && mismatches.empty()}};
  report["pass"] = ok;
  return report;
}

namespace {

Json root_example(const std::string& name, int p, const Integer& expected_image) {
  const auto l = lattice::root_lattice(name, -1);
  const auto disc = lattice::discriminant_group(l);
  const auto q = lattice::mod_p_quotient(l, p);
  const auto w = lattice::weyl_image_order(l, p);
  const Integer degrees = lattice::weyl_order_from_degrees(name);
  Json out{{"lattice", name},
           {"p", p},
           {"roots", lattice::roots(l).size()},
           {"discriminant", invariants(disc)},
           {"dim", q.dim},
           {"radical_dim", q.radical_dim},
           {"quotient_dim", q.quotient_dim},
           {"nondegenerate", q.nondegenerate},
           {"alternating", q.alternating},
           {"group_order", integer(w.group_order)},
           {"degree_product", integer(degrees)},
           {"image_order", integer(w.image_order)},
           {"expected_image_order", integer(expected_image)},
           {"faithful", w.faithful}};
  bool ok = q.radical_dim == 1 && q.nondegenerate && w.group_order == degrees && w.image_order == expected_image;
  if (name == "E6") ok = ok && disc.invariant_factors == IntVector{3} && q.quotient_dim == 5 && w.faithful;
  if (name == "E7") ok = ok && q.quotient_dim == 6 && q.alternating;
  out["pass"] = ok;
  return out;
}

Json pl_suite() {
  Json cases = Json::array();
  bool ok = true;
  const auto e6 = lattice::root_lattice("E6", -1);
  for (std::size_t i = 0; i < e6.rank(); ++i) {
    const auto t = lattice::pl_transvection(e6, e6.vanishing[i], 3);
    const bool preserves = lattice::preserves_form(t, e6.gram);
    const auto order = lattice::matrix_order(t, 4);
    const bool involution = order && *order == 2;
    ok = ok && preserves && involution;
    cases.push_back(Json{{"lattice", "E6"}, {"root", i}, {"n", 3}, {"preserves_form", preserves},
                         {"order", order ? Json(*order) : Json(nullptr)}});
  }
  lattice::LatticeWithForm hyp;
  hyp.gram = IntMatrix{{0, 1}, {-1, 0}};
  hyp.parity = lattice::Parity::antisymmetric;
  const IntVector e1{1, 0};
  const auto t = lattice::pl_transvection(hyp, e1, 2);
  const bool preserves = lattice::preserves_form(t, hyp.gram);
  ok = ok && preserves;
  cases.push_back(Json{{"lattice", "hyperbolic-antisymmetric"}, {"n", 2}, {"preserves_form", preserves},
                       {"matrix", to_string(t)}});
  return Json{{"cases", cases}, {"pass", ok}};
}

Json pham_suite() {
  Json cases = Json::array();
  bool ok = true;
  for (int d = 2; d <= 5; ++d) {
    const auto h = lattice::standard_model(d, 2);
    h.validate();
    IntVector delta(h.rank());
    delta[0] = 1;
    const auto t = lattice::pham_reflection(h, delta);
    const bool preserves = lattice::preserves_form(t, h.intersection_form());
    const bool commutes = t * h.action == h.action * t;
    const auto order = lattice::matrix_order(t, static_cast<unsigned>(2 * d));
    bool matches_pl = true;
    if (d == 2) {
      lattice::LatticeWithForm l;
      l.gram = h.intersection_form();
      matches_pl = lattice::pl_transvection(l, delta, 3) == t;
    }
    const bool good = preserves && commutes && order && *order == static_cast<unsigned>(d) && matches_pl;
    ok = ok && good;
    cases.push_back(Json{{"d", d}, {"n", 2}, {"preserves_form", preserves}, {"commutes_with_g", commutes},
                         {"order", order ? Json(*order) : Json(nullptr)}, {"matches_pl", matches_pl},
                         {"pass", good}});
  }
  return Json{{"cases", cases}, {"pass", ok}};
}

Json refinement_suite() {
  Json cases = Json::array();
  bool ok = true;
  {
    const auto e6 = lattice::root_lattice("E6", -1);
    const auto q = lattice::quadratic_refinement(e6, 3);
    ok = ok && q.pass;
    cases.push_back(Json{{"lattice", "E6"}, {"n", 3}, {"values", integers(q.values)},
                         {"expected", integer(q.expected)}, {"pass", q.pass}});
  }
  {
    lattice::LatticeWithForm hyp;
    hyp.gram = IntMatrix{{0, 1}, {1, 0}};
    hyp.vanishing = {IntVector{1, 0}, IntVector{0, 1}};
    const auto q = lattice::quadratic_refinement(hyp, 3);
    const bool good = q.values == std::vector<Integer>{0, 0};
    ok = ok && good;
    cases.push_back(Json{{"lattice", "hyperbolic-even"}, {"n", 3}, {"values", integers(q.values)}, {"pass", good}});
  }
  {
    lattice::LatticeWithForm sym;
    sym.gram = IntMatrix{{0, 1}, {-1, 0}};
    sym.parity = lattice::Parity::antisymmetric;
    sym.vanishing = {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}};
    const auto q = lattice::quadratic_refinement(sym, 2);
    ok = ok && q.pass;
    cases.push_back(Json{{"lattice", "symplectic-2"}, {"n", 2}, {"feasible", q.feasible},
                         {"basis_values", q.basis_values}, {"pass", q.pass}});
  }
  return Json{{"cases", cases}, {"pass", ok}};
}

}  // namespace

Json lattice_report(const std::string& which) {
  if (which != "e6" && which != "e7" && which != "both")
    throw std::invalid_argument("lattice: expected e6, e7 or both");
  Json report;
  report["schema"] = 1;
  report["version"] = CYCLOCOVER_VERSION;
  report["command"] = "lattice";
  report["which"] = which;
  Json checks = Json::object();
  if (which != "e7") checks["e6-mod3"] = root_example("E6", 3, 51840);
  if (which != "e6") checks["e7-mod2"] = root_example("E7", 2, 1451520);
  checks["pl-order"] = pl_suite();
  checks["pham-order"] = pham_suite();
  checks["quadratic-refinement"] = refinement_suite();
  bool ok = true;
  for (const auto& [k, v] : checks.items()) ok = ok && v["pass"].get<bool>();
  report["checks"] = checks;
  report["pass"] = ok;
  return report;
}

Json checked_payload(const Json& report) {
  Json out = report;
  out.erase("timings");
  return out;
}

std::string verify_csv(const Json& report) {
  std::ostringstream out;
  out << "n,d,check,pass\n";
  for (const auto& c : report["cases"])
    for (const auto& [key, value] : c["checks"].items())
      out << c["n"].get<int>() << ',' << c["d"].get<int>() << ',' << csv_escape(key) << ','
          << (value["pass"].get<bool>() ? "true" : "false") << '\n';
  return out.str();
}

std::string ranks_csv(const Json& report) {
  std::ostringstream out;
  out << "d,n,closed_form,recurrence,identity,printed_recurrence,consistent\n";
  for (const auto& e : report["entries"]) {
    auto num = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    out << e["d"].get<int>() << ',' << e["n"].get<int>() << ',' << num(e["closed_form"]) << ','
        << num(e["recurrence"]) << ',' << e["identity"].dump() << ',' << e["printed_recurrence"].dump() << ','
        << e["consistent"].dump() << '\n';
  }
  return out.str();
}

Json ranks_entries_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  const auto header = split(line, ',');
  Json entries = Json::array();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw std::invalid_argument("ranks csv: ragged row");
    Json e;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& h = header[i];
      const std::string& v = cells[i];
      if (v == "true" || v == "false") {
        e[h] = v == "true";
      } else {
        Integer z(v);
        e[h] = integer(z);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string render(const Json& report, const std::string& format, const std::string& csv) {
  return format == "csv" ? csv : report.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact group-ring verification of cyclic covers of Fermat hypersurfaces", "cyclocover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CYCLOCOVER_VERSION);

  std::string n_text = "1..3", d_text = "2..5", format = "json", out_path, which;
  std::vector<std::string> suite_args;
  std::size_t cap = fermat::kDefaultCap;
  unsigned jobs = 1;
  bool cap_given = false;

  auto* verify = app.add_subcommand("verify", "Run the statement suites over a grid of (n, d)");
  verify->add_option("--n", n_text, "Range A..B of n");
  verify->add_option("--d", d_text, "Range A..B of d");
  verify->add_option("--suite", suite_args, "Suite key or 'all' (repeatable, comma separated)")->delimiter(',');
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "Write the report to FILE");
  verify->add_option_function<std::size_t>("--cap", [&](std::size_t v) { cap = v; cap_given = true; },
                                           "Ambient rank cap d^(n+1)");
  verify->add_option("--jobs", jobs, "Cases run in parallel")->check(CLI::PositiveNumber);

  auto* ranks = app.add_subcommand("ranks", "Table of primitive ranks p_n(d)");
  std::string rank_d = "2..5", rank_n = "0..6";
  ranks->add_option("--d", rank_d, "Range A..B of d");
  ranks->add_option("--n", rank_n, "Range A..B of n");
  ranks->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  ranks->add_option("--out", out_path, "Write the report to FILE");

  auto* lat = app.add_subcommand("lattice", "Root lattice level-structure examples");
  lat->add_option("which", which, "e6, e7 or both")->required()->check(CLI::IsMember({"e6", "e7", "both"}));
  lat->add_option("--format", format)->check(CLI::IsMember({"json"}));
  lat->add_option("--out", out_path, "Write the report to FILE");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      VerifySpec spec;
      spec.n = parse_range(n_text);
      spec.d = parse_range(d_text);
      if (spec.n.lo < 1 || spec.d.lo < 2) throw std::invalid_argument("verify: need n >= 1 and d >= 2");
      if (const char* env = std::getenv("CYCLOCOVER_CAP"); env != nullptr && !cap_given) {
        try {
          std::size_t pos = 0;
          cap = std::stoul(env, &pos);
          if (pos != std::string(env).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw std::invalid_argument(std::string("invalid CYCLOCOVER_CAP '") + env + "'");
        }
      }
      spec.cap = cap;
      spec.jobs = jobs;
      for (const auto& s : suite_args) {
        if (s == "all") {
          spec.suites.clear();
          break;
        }
        if (std::find(suite_keys().begin(), suite_keys().end(), s) == suite_keys().end())
          throw std::invalid_argument("unknown suite '" + s + "'");
        if (std::find(spec.suites.begin(), spec.suites.end(), s) == spec.suites.end()) spec.suites.push_back(s);
      }
      // Keep the canonical suite order.
      std::vector<std::string> ordered;
      for (const auto& k : suite_keys())
        if (std::find(spec.suites.begin(), spec.suites.end(), k) != spec.suites.end()) ordered.push_back(k);
      spec.suites = ordered;
      Json report;
      try {
        report = verify_report(spec);
      } catch (const fermat::CapExceeded& e) {
        err << "cyclocover: cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
      }
      emit(render(report, format, format == "csv" ? verify_csv(report) : std::string()), out_path, out);
      return report["pass"].get<bool>() ? kPass : kCheckFailure;
    }
    if (*ranks) {
      Json report = ranks_report(parse_range(rank_d), parse_range(rank_n));
      emit(render(report, format, format == "csv" ? ranks_csv(report) : std::string()), out_path, out);
      return report["pass"].get<bool>() ? kPass : kCheckFailure;
    }
    if (*lat) {
      Json report;
      try {
        report = lattice_report(which);
      } catch (const lattice::EnumerationCapExceeded& e) {
        err << "cyclocover: cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
      }
      emit(render(report, "json", {}), out_path, out);
      return report["pass"].get<bool>() ? kPass : kCheckFailure;
    }
  } catch (const std::invalid_argument& e) {
    err << "cyclocover: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolation& e) {
    err << "cyclocover: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cyclocover::cli

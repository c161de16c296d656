// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include "cli.hpp"
#include "cyclocover/fermat.hpp"
#include "cyclocover/gmodule.hpp"
#include "cyclocover/group_ring.hpp"
#include "cyclocover/lattice.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace cyclocover;
using fermat::FermatCase;
using fermat::Workspace;

namespace {

std::vector<FermatCase> grid() {
  std::vector<FermatCase> out;
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 5; ++d) out.push_back({n, d});
  out.push_back({4, 3});
  return out;
}

AbelianInvariants cyclic(const Integer& d) {
  AbelianInvariants a;
  if (d > 1) a.invariant_factors.push_back(d);
  return a;
}

Integer ipow(long b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (!first_failure_.empty()) return;
    first_failure_ = what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome(const std::string& summary) const {
    return {pass_, pass_ ? summary : summary + "; first failure: " + first_failure_};
  }

 private:
  bool pass_ = true;
  std::string first_failure_;
};

Outcome rank_formula() {
  Log log;
  for (const auto& c : grid()) {
    Workspace ws(c.d);
    const auto r = fermat::verify_ranks(c, ws);
    log.check(Integer(static_cast<unsigned long>(r.pham_rank)) == ipow(c.d - 1, c.n + 1), c.name() + " pham rank");
    log.check(Integer(static_cast<unsigned long>(r.quotient_rank)) == fermat::primitive_rank(c.n, c.d),
              c.name() + " quotient rank");
    log.check(r.pass, c.name() + " rank report");
  }
  return log.outcome("ideal ranks (d-1)^(n+1) and quotient ranks p_n(d) on 13 cases");
}

Outcome invariant_parts() {
  Log log;
  for (const auto& c : grid()) {
    Workspace ws(c.d);
    const auto r = fermat::invariants_two_ways(c, ws);
    log.check(r.equal && r.pass, c.name());
  }
  return log.outcome("invariant parts agree as submodules on 13 cases");
}

Outcome duality() {
  Log log;
  for (const auto& c : grid()) {
    Workspace ws(c.d);
    const auto r = fermat::verify_compare(c, ws);
    if (c.n % 2 == 1) {
      log.check(r.kernel.is_trivial() && r.cokernel.is_trivial(), c.name() + " odd: kernel and cokernel 0");
      const auto p = fermat::verify_product_ideal(c, ws);
      log.check(p.applicable && p.pass, c.name() + " product ideal");
    } else {
      // Integrally the map is injective with cokernel Z/d; the Z/d kernel lives mod d.
      log.check(r.kernel.is_trivial(), c.name() + " even: integral kernel 0");
      log.check(r.cokernel == cyclic(c.d), c.name() + " even: cokernel Z/d");
      log.check(r.kernel_mod_d == cyclic(c.d), c.name() + " even: kernel mod d Z/d");
      log.check(r.cokernel_mod_d == cyclic(c.d), c.name() + " even: cokernel mod d Z/d");
    }
    log.check(r.pass, c.name() + " report");
  }
  return log.outcome("odd n: 0 / 0, even n: Z/d / Z/d (mod d), product ideal equality for odd n");
}

Outcome reduction_maps() {
  Log log;
  std::ostringstream orders;
  for (const auto& c : grid()) {
    Workspace ws(c.d);
    const auto r = fermat::verify_main(c, ws);
    log.check(r.first_map == (c.n % 2 == 0 ? "r" : "s"), c.name() + " map choice");
    log.check(r.first_surjective, c.name() + " surjective");
    log.check(r.commutes && r.certificates, c.name() + " factorization commutes");
    log.check(r.kernel_cyclic_dividing_d, c.name() + " kernel cyclic dividing d");
    log.check(r.pass, c.name() + " report");
    orders << ' ' << c.n << ',' << c.d << ':' << r.first_kernel_order.get_str();
  }
  return log.outcome("surjective, commuting, kernel orders" + orders.str());
}

Outcome corner_dimensions() {
  Log log;
  for (const auto& c : grid()) {
    if (c.d != 2 && c.d != 3 && c.d != 5) continue;
    Workspace ws(c.d);
    const auto r = fermat::verify_corollary(c, ws);
    const Integer corner = fermat::primitive_rank(c.n - 1, c.d) + (c.n % 2 == 0 ? 1 : -1);
    log.check(Integer(static_cast<unsigned long>(r.bottom_left_dim)) == corner, c.name() + " left corner");
    log.check(Integer(static_cast<unsigned long>(r.bottom_right_dim)) == corner, c.name() + " right corner");
    log.check(r.pass, c.name() + " image dimension");
  }
  {
    Workspace ws(3);
    const auto r = fermat::verify_corollary({4, 3}, ws);
    log.check(r.bottom_image_dim == 10, "n=4,d=3 image dimension 10");
  }
  {
    Workspace ws(3);
    const auto r = fermat::verify_main({3, 3}, ws);
    log.check(r.first_map == "s" && r.first_surjective, "n=3,d=3 s surjective");
    log.check(fermat::fp_dimension(r.first_source, 3) == 6, "n=3,d=3 source dimension 6");
    log.check(fermat::fp_dimension(r.first_target, 3) == 5, "n=3,d=3 target dimension 5");
    log.check(r.first_kernel_order == 3, "n=3,d=3 kernel order 3");
  }
  return log.outcome("corner dimensions p_{n-1}(p)+(-1)^n; (4,3) image 10; (3,3) 6 -> 5 with kernel 3");
}

Outcome complex() {
  Log log;
  std::ostringstream seen;
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      const FermatCase c{n, d};
      Workspace ws(d);
      const auto r = fermat::verify_complex(c, ws);
      log.check(r.squares_to_zero, c.name() + " D o D = 0");
      seen << ' ' << n << ',' << d << ":[";
      for (std::size_t k = 0; k < r.homology.size(); ++k) {
        seen << (k ? " " : "") << r.homology[k].to_string();
        log.check(r.homology[k] == cyclic(d), c.name() + " homology in degree -" + std::to_string(k) + " is " +
                                                  r.homology[k].to_string());
      }
      seen << ']';
    }
  return log.outcome("homology" + seen.str());
}

Outcome e6() {
  Log log;
  const auto l = lattice::root_lattice("E6", -1);
  log.check(lattice::discriminant_group(l) == cyclic(3), "discriminant Z/3");
  const auto q = lattice::mod_p_quotient(l, 3);
  log.check(q.radical_dim == 1, "radical dimension 1");
  log.check(q.quotient_dim == 5 && q.nondegenerate, "nondegenerate quotient dimension 5");
  const auto w = lattice::weyl_image_order(l, 3);
  log.check(w.group_order == 51840, "group order 51840");
  log.check(w.image_order == 51840 && w.faithful, "image order 51840");
  log.check(lattice::weyl_order_from_degrees("E6") == 51840, "degree product 51840");
  return log.outcome("Z/3, radical 1, quotient 5, |W| = image = 51840 = 2*5*6*8*9*12");
}

Outcome e7() {
  Log log;
  const auto l = lattice::root_lattice("E7", -1);
  const auto q = lattice::mod_p_quotient(l, 2);
  log.check(q.radical_dim == 1, "radical dimension 1");
  log.check(q.quotient_dim == 6 && q.alternating && q.nondegenerate, "symplectic quotient dimension 6");
  const auto w = lattice::weyl_image_order(l, 2);
  log.check(w.image_order == 1451520, "image order 1451520");
  log.check(w.group_order == 2903040, "group order 2903040");
  return log.outcome("radical 1, symplectic quotient 6, image 1451520");
}

Outcome transformations() {
  Log log;
  const auto e6 = lattice::root_lattice("E6", -1);
  for (const auto& delta : e6.vanishing) {
    const auto t = lattice::pl_transvection(e6, delta, 3);
    log.check(lattice::preserves_form(t, e6.gram), "E6 transvection preserves Gram");
    log.check(t * t == IntMatrix::identity(e6.rank()) && !t.is_identity(), "E6 transvection is an involution");
  }
  lattice::LatticeWithForm hyp;
  hyp.gram = IntMatrix{{0, 1}, {-1, 0}};
  hyp.parity = lattice::Parity::antisymmetric;
  log.check(lattice::preserves_form(lattice::pl_transvection(hyp, IntVector{1, 0}, 2), hyp.gram),
            "symplectic transvection preserves Gram");
  for (int d = 2; d <= 5; ++d) {
    const auto h = lattice::standard_model(d, 2);
    IntVector delta(h.rank());
    delta[0] = 1;
    const auto t = lattice::pham_reflection(h, delta);
    log.check(lattice::preserves_form(t, h.intersection_form()) && lattice::preserves_form(t, h.variation) &&
                  t * h.action == h.action * t,
              "d=" + std::to_string(d) + " Pham form preserved");
    log.check(lattice::matrix_order(t, 2 * d) == static_cast<unsigned>(d), "d=" + std::to_string(d) + " order d");
  }
  return log.outcome("transvections preserve forms, involutions at odd n; Pham order d for d=2..5");
}

Outcome micro_suite() {
  using gmodule::EquivariantModule;
  Log log;
  for (int d = 2; d <= 8; ++d) {
    const auto tag = "d=" + std::to_string(d) + " ";
    const auto reg = gmodule::r_map(EquivariantModule::regular(d));
    log.check(reg.well_defined && reg.source() == cyclic(d) && reg.target() == cyclic(d) && reg.is_isomorphism(),
              tag + "r_ZG isomorphism");
    const auto triv = gmodule::r_map(EquivariantModule::trivial(d));
    log.check(triv.well_defined && triv.source().is_trivial() && triv.target() == cyclic(d), tag + "r_Z inclusion of 0");
    const auto aug = EquivariantModule::augmentation_ideal(d);
    const auto r_aug = gmodule::r_map(aug);
    log.check(r_aug.well_defined && r_aug.target().is_trivial(), tag + "r_I target 0");
    log.check(gmodule::coinvariants(aug).module == cyclic(d), tag + "(I)_G = Z/d");
    const group_ring::RingShape s(d, 1);
    const auto a = group_ring::GroupRingElement::variable(s, 0) - group_ring::GroupRingElement::one(s);
    const SubQuotient i_mod_i2(group_ring::ideal_basis(a), group_ring::ideal_basis(a * a));
    log.check(i_mod_i2.invariants() == cyclic(d), tag + "I/I^2 = Z/d");
  }
  return log.outcome("r_ZG iso, r_Z = 0 -> Z/d, r_I target 0, (I)_G = I/I^2 = Z/d for d=2..8");
}

Outcome determinism() {
  cli::VerifySpec spec;
  spec.n = {1, 3};
  spec.d = {2, 5};
  const auto a = cli::checked_payload(cli::verify_report(spec)).dump(2);
  spec.jobs = 4;
  const auto b = cli::checked_payload(cli::verify_report(spec)).dump(2);
  spec.jobs = 1;
  const auto c = cli::checked_payload(cli::verify_report(spec)).dump(2);
  Log log;
  log.check(a == c, "repeat run differs");
  log.check(a == b, "parallel run differs");
  return log.outcome("three verify runs (serial, 4 jobs, serial) byte-identical, " + std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds = 0;  // 0: no limit
  };
  const std::vector<Criterion> criteria = {
      {"rank formula", rank_formula, 300},
      {"invariants two ways", invariant_parts},
      {"duality map", duality},
      {"reduction maps", reduction_maps},
      {"prime-degree dimensions", corner_dimensions},
      {"stratification complex", complex},
      {"E6 level 3", e6, 120},
      {"E7 level 2", e7, 600},
      {"transformations", transformations},
      {"group-ring micro-suite", micro_suite},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    char time_text[32];
    std::snprintf(time_text, sizeof time_text, "%.2fs", secs);
    std::cout << "criterion " << (i + 1) << ' ' << (o.pass ? "PASS" : "FAIL") << " [" << criteria[i].name << "] "
              << o.detail << " (" << time_text << ")" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

#include "cyclocover/fermat.hpp"
#include "cyclocover/lattice.hpp"

#include "doctest.h"

using namespace cyclocover;
using namespace cyclocover::fermat;

namespace {

AbelianInvariants cyclic(long d) {
  AbelianInvariants a;
  if (d > 1) a.invariant_factors.emplace_back(d);
  return a;
}

Integer ipow(long b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

const std::vector<FermatCase> kGrid = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4},
                                       {2, 5}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 3}};

}  // namespace

TEST_CASE("primitive rank closed form") {
  for (int d = 2; d <= 7; ++d) CHECK(primitive_rank(0, d) == d - 1);
  CHECK(primitive_rank(4, 3) == 22);
  CHECK(primitive_rank(1, 2) == 0);
  CHECK(primitive_rank(1, 3) == 2);
  CHECK(primitive_rank(3, 3) == 10);
  CHECK(primitive_rank(2, 3) == 6);
  CHECK(half_ranks(6) == std::vector<Integer>{1, 1, 3, 5, 11, 21, 43});
}

TEST_CASE("rank table consistency") {
  for (const auto& e : rank_table(7, 8)) {
    CHECK(e.closed_form == e.recurrence);
    CHECK(e.identity);
    CHECK(e.consistent);
    CHECK(e.closed_form >= 0);
  }
  // The printed recurrence p_n = (d-1)^{n+1} + p_{n-1} fails as soon as p_{n-1} != 0.
  bool printed_fails = false;
  for (const auto& e : rank_table(3, 3)) printed_fails = printed_fails || !e.plus_recurrence;
  CHECK(printed_fails);
  const auto quoted = quoted_half_ranks();
  CHECK(quoted.size() == 7);
}

TEST_CASE("pham ideal ranks") {
  Workspace w2(2), w3(3);
  CHECK(w2.pham(1).rank() == 1);
  CHECK(w2.pham(1).ambient_rank() == 4);
  CHECK(w3.pham(2).rank() == 8);
  CHECK(w3.pham(2).ambient_rank() == 27);
  const auto pm = pham_module({2, 3}, w3);
  CHECK(power(pm.module.action(), 3) == IntMatrix::identity(27));
  CHECK_FALSE(pm.module.action_coords() == IntMatrix::identity(8));
}

TEST_CASE("intersection lattices") {
  Workspace w2(2), w3(3);
  CHECK(w2.intersection(1).rank() == 1);
  CHECK(w3.intersection(2).rank() == 2);
  CHECK(w2.intersection(3).rank() == 1);
  CHECK(w3.intersection(4).rank() == 10);
  CHECK(w3.intersection(3).rank() == 6);
}

TEST_CASE("exact sequence ranks and invariant parts on the grid") {
  for (const auto& c : kGrid) {
    const auto name = c.name();
    CAPTURE(name);
    Workspace ws(c.d);
    const auto r = verify_ranks(c, ws);
    CHECK(Integer(static_cast<unsigned long>(r.pham_rank)) == ipow(c.d - 1, c.n + 1));
    CHECK(Integer(static_cast<unsigned long>(r.quotient_rank)) == primitive_rank(c.n, c.d));
    CHECK(r.quotient_free);
    CHECK(r.exact_sequence);
    CHECK(r.pass);
    const auto l = invariants_two_ways(c, ws);
    CHECK(l.equal);
    CHECK(l.pass);
  }
}

TEST_CASE("duality map") {
  Workspace w3(3), w4(4);
  const auto odd = verify_compare({3, 3}, w3);
  CHECK(odd.kernel.is_trivial());
  CHECK(odd.cokernel.is_trivial());
  const auto even = verify_compare({2, 3}, w3);
  CHECK(even.kernel_mod_d == cyclic(3));
  CHECK(even.cokernel == cyclic(3));
  CHECK(even.cokernel_mod_d == cyclic(3));
  const auto composite = verify_compare({2, 4}, w4);
  CHECK(composite.cokernel == cyclic(4));
  CHECK(composite.kernel_mod_d == cyclic(4));
  for (const auto* r : {&odd, &even, &composite}) {
    CHECK(r->well_defined);
    CHECK(r->equivariant);
    CHECK(r->pass);
  }
}

TEST_CASE("primitive pair data") {
  for (const auto& c : {FermatCase{2, 2}, FermatCase{2, 3}, FermatCase{3, 3}}) {
    Workspace ws(c.d);
    const auto p = primitive_pair(c, ws);
    CHECK(p.well_defined);
    CHECK(Integer(static_cast<unsigned long>(p.cohomology_prime.rank())) == primitive_rank(c.n - 1, c.d));
    CHECK(Integer(static_cast<unsigned long>(p.homology.free_rank())) == primitive_rank(c.n, c.d));
    CHECK(p.iota * p.cohomology_action == p.homology_action * p.iota);
  }
}

TEST_CASE("product ideal equality") {
  for (const auto& c : kGrid) {
    Workspace ws(c.d);
    const auto r = verify_product_ideal(c, ws);
    CHECK(r.applicable == (c.n % 2 == 1));
    CHECK(r.pass);
  }
}

TEST_CASE("diagram certificates") {
  for (const auto& c : {FermatCase{1, 2}, FermatCase{2, 3}, FermatCase{3, 3}, FermatCase{2, 4}}) {
    const auto name = c.name();
    CAPTURE(name);
    Workspace ws(c.d);
    const auto dg = build_diagram(c, ws);
    CHECK(dg.certificates.all());
    CHECK(dg.generator_chase);
    CHECK(equal_as_maps(compose(dg.r, dg.top_mod), compose(dg.r, dg.top_mod)));
    CHECK(dg.r.well_defined());
    CHECK(dg.s.well_defined());
  }
}

TEST_CASE("reduction map examples") {
  {
    Workspace ws(3);
    const auto r = verify_main({3, 3}, ws);
    CHECK(r.first_map == "s");
    CHECK(r.first_surjective);
    CHECK(fp_dimension(r.first_source, 3) == 6);
    CHECK(fp_dimension(r.first_target, 3) == 5);
    CHECK(r.first_kernel_order == 3);
    CHECK(r.pass);
  }
  {
    Workspace ws(3);
    const auto r = verify_main({4, 3}, ws);
    CHECK(r.first_map == "r");
    CHECK(r.pass);
    const auto c = verify_corollary({4, 3}, ws);
    CHECK(c.bottom_left_dim == 11);
    CHECK(c.bottom_right_dim == 11);
    CHECK(c.bottom_image_dim == 10);
    CHECK(c.pass);
  }
  {
    Workspace ws(4);
    const auto r = verify_main({2, 4}, ws);
    CHECK(r.kernel_cyclic_dividing_d);
    CHECK(4 % r.first_kernel_order == 0);
  }
  {
    Workspace ws(6);
    const auto r = verify_main({2, 6}, ws);
    CHECK(r.kernel_cyclic_dividing_d);
    CHECK(6 % r.first_kernel_order == 0);
  }
}

TEST_CASE("reduction maps and corner dimensions on the grid") {
  for (const auto& c : kGrid) {
    const auto name = c.name();
    CAPTURE(name);
    Workspace ws(c.d);
    const auto r = verify_main(c, ws);
    CHECK(r.first_surjective);
    CHECK(r.commutes);
    CHECK(r.certificates);
    CHECK(r.kernel_cyclic_dividing_d);
    CHECK(r.pass);
    const auto k = verify_corollary(c, ws);
    CHECK(k.applicable == is_prime(c.d));
    if (k.applicable) {
      const Integer expected = primitive_rank(c.n - 1, c.d) + (c.n % 2 == 0 ? 1 : -1);
      CHECK(Integer(static_cast<unsigned long>(k.bottom_left_dim)) == expected);
      CHECK(Integer(static_cast<unsigned long>(k.bottom_right_dim)) == expected);
    }
    CHECK(k.pass);
  }
}

TEST_CASE("cubic threefold corner matches the E6 quotient") {
  Workspace ws(3);
  const auto k = verify_corollary({3, 3}, ws);
  const auto q = lattice::mod_p_quotient(lattice::root_lattice("E6", -1), 3);
  CHECK(k.bottom_right_dim == q.quotient_dim);
}

TEST_CASE("stratification complex") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      Workspace ws(d);
      const auto r = verify_complex({n, d}, ws);
      CHECK(r.squares_to_zero);
      CHECK(r.homology.size() == static_cast<std::size_t>(n));
      CHECK(r.homology[0] == (n % 2 == 1 ? cyclic(d) : AbelianInvariants{}));
    }
  Workspace ws(3);
  CHECK(verify_complex({1, 3}, ws).pass);
}

TEST_CASE("workspace enforces the cap") {
  Workspace small(3, 30);
  CHECK_NOTHROW(small.pham(2));
  CHECK_THROWS_AS(small.pham(3), CapExceeded);
}

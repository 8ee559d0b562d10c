#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "terwb/cellular.hpp"
#include "terwb/classes.hpp"

using namespace terwb;

namespace {

const PrimeField f2(2), f3(3);
const RationalField q;

template <class F>
struct Setup {
  ClassData c;
  TerwilligerAlgebra<F> tw;
  StructuredBasis<F> b;
  MultiplicationTable<F> mt;
};

template <class F>
Setup<F> setup(const Scheme& s, const F& field, Vertex x = 0) {
  auto c = class_data(s);
  auto tw = generate(s, x, field);
  auto b = structured_basis(s, x, field, c);
  auto mt = multiplication_table(b, s, field);
  return {std::move(c), std::move(tw), std::move(b), std::move(mt)};
}

template <class F>
void check_cellular(const Scheme& s, const F& field, const std::string& name) {
  auto st = setup(s, field);
  const auto& t = st.mt.algebra;
  auto datum = cell_datum(st.b, st.c);
  CHECK_MESSAGE(check_cell_datum(datum).passed(), name);
  CHECK_MESSAGE(verify_involution(st.tw, st.b).passed(), name);
  CHECK_MESSAGE(verify_C3(t, st.b, datum).report.passed(), name);
  auto chain = build_cell_chain(t, st.b, datum);
  CHECK_MESSAGE(chain.report.passed(), name);
  CHECK(chain.length() == st.c.r() + 1);

  Subspace<F> radical = t.coordinate_span({});
  if (field.characteristic() == 2) radical = radical_char2(t, st.b, st.c, s.data().valency).radical;
  auto her = verify_heredity(t, chain, radical, st.c.r() + 1);
  CHECK_MESSAGE(her.passed(), name << ": " << (her.passed() ? "" : her.first_failure()->name));
}

}  // namespace

TEST_SUITE_BEGIN("cellular");

TEST_CASE("cell datum of cycle(4)") {
  auto st = setup(cycle_scheme(4), f2);
  auto datum = cell_datum(st.b, st.c);
  CHECK(datum.r == 1);
  CHECK(datum.m[0] == std::vector<Relation>{0, 1, 2});
  CHECK(datum.m[1] == std::vector<Relation>{1});
  CHECK(CellDatum::less(0, 1));
  CHECK_FALSE(CellDatum::less(1, 0));
  CHECK_FALSE(CellDatum::less(1, 2));
  CHECK_FALSE(CellDatum::less(1, 1));
  auto k = st.b.at(0, 0, 1);
  CHECK(datum.labels[datum.involution[k]] == BasisLabel{0, 1, 0});
}

TEST_CASE("a broken involution is caught") {
  auto st = setup(cycle_scheme(4), f2);
  auto datum = cell_datum(st.b, st.c);
  std::swap(datum.involution[0], datum.involution[1]);
  CHECK_FALSE(check_cell_datum(datum).passed());
}

TEST_CASE("cell chain of cycle(4) is 0 < 9 < 10") {
  auto st = setup(cycle_scheme(4), f2);
  auto datum = cell_datum(st.b, st.c);
  auto chain = build_cell_chain(st.mt.algebra, st.b, datum);
  CHECK(chain.dims() == std::vector<std::size_t>{0, 9, 10});
  CHECK(chain.length() == 2);
}

TEST_CASE("cell chain of cycle(8) and wreath-2-4") {
  auto c8 = setup(cycle_scheme(8), q);
  CHECK(build_cell_chain(c8.mt.algebra, c8.b, cell_datum(c8.b, c8.c)).dims() ==
        std::vector<std::size_t>{0, 25, 34});
  const auto& w = find_catalog("wreath-2-4")->scheme;
  auto w4 = setup(w, f2);
  CHECK(build_cell_chain(w4.mt.algebra, w4.b, cell_datum(w4.b, w4.c)).dims() ==
        std::vector<std::size_t>{0, 25, 26, 27, 28});
}

TEST_CASE("r_a tables of cycle(4) in the top cell") {
  auto st = setup(cycle_scheme(4), f2);
  auto datum = cell_datum(st.b, st.c);
  auto c3 = verify_C3(st.mt.algebra, st.b, datum);
  // On the one-dimensional cell 1, b^1_11 acts as 1 and every b^0 as 0.
  CHECK(c3.r_tables[1][st.b.at(1, 1, 1)](0, 0) == 1);
  CHECK(c3.r_tables[1][st.b.at(0, 1, 1)](0, 0) == 0);
  // On cell 0, b^0_11 acts on b^0_{S,T} through multiplication by k_1 = 2 = 0.
  CHECK(c3.r_tables[0][st.b.at(0, 1, 1)].is_zero());
}

TEST_CASE("heredity fails for a wrong simple count") {
  auto st = setup(cycle_scheme(4), q);
  auto chain = build_cell_chain(st.mt.algebra, st.b, cell_datum(st.b, st.c));
  CHECK_FALSE(verify_heredity(st.mt.algebra, chain, st.mt.algebra.coordinate_span({}), 3).passed());
}

TEST_CASE("cellular and quasi-hereditary on the catalog over three fields") {
  for (const auto& e : catalog()) {
    if (e.kind == SchemeKind::neither) continue;
    check_cellular(e.scheme, f2, e.name);
    check_cellular(e.scheme, f3, e.name);
    check_cellular(e.scheme, q, e.name);
  }
}

TEST_CASE("property: transpose is an anti-automorphism on random elements") {
  for (int trial = 0; trial < 120; ++trial) {
    auto s = support::random_quasi_thin(9);
    Vertex x = support::uniform(0, s.n() - 1);
    auto tw = generate(s, x, f3);
    auto random_element = [&] {
      Matrix<PrimeField> m(f3, s.n(), s.n());
      for (const auto& v : tw.closure.basis()) {
        auto coef = f3.from_int(static_cast<long long>(support::uniform(0, 2)));
        m = m + unflatten(f3, s.n(), v).scaled(coef);
      }
      return m;
    };
    auto a = random_element(), b = random_element();
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(tw.contains(a.transpose()));
    CHECK(a.transpose().transpose() == a);
  }
}

TEST_CASE("property: cellular checks on random quasi-thin schemes") {
  for (int trial = 0; trial < 100; ++trial) {
    auto s = support::random_quasi_thin(8);
    if (trial % 2) check_cellular(s, f2, "random");
    else check_cellular(s, q, "random");
  }
}

TEST_SUITE_END();

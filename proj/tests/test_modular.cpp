#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "core/modular.hpp"
#include "core/util.hpp"

using namespace wck;

namespace {

using Entries = std::array<int64_t, 4>;

Entries canon(int64_t a, int64_t b, int64_t c, int64_t d) {
  int64_t lead = c != 0 ? c : (d != 0 ? d : a);
  if (lead < 0) { a = -a; b = -b; c = -c; d = -d; }
  return {a, b, c, d};
}

// Independent ball enumeration by exhaustive entry scan.
std::set<Entries> brute_ball(int64_t r) {
  std::set<Entries> out;
  for (int64_t a = -r; a <= r; ++a)
    for (int64_t b = -r; b <= r; ++b)
      for (int64_t c = -r; c <= r; ++c)
        for (int64_t d = -r; d <= r; ++d)
          if (a * d - b * c == 1 && a * a + b * b + c * c + d * d <= r * r)
            out.insert(canon(a, b, c, d));
  return out;
}

Entries entries(const GroupElement& g) { return {g.a, g.b, g.c, g.d}; }

}  // namespace

TEST_CASE("group element arithmetic and canonical sign") {
  GroupElement id;
  CHECK(GroupElement(-1, 0, 0, -1) == id);
  CHECK_THROWS_AS(GroupElement(1, 0, 0, 2), const Error&);  // det 2
  CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), const Error&);  // det 0

  GroupElement s(0, -1, 1, 0), t(1, 1, 0, 1);
  CHECK(s * s == id);  // -I collapses in PSL
  CHECK((t * s) * (t * s) * (t * s) == id);
  CHECK(s * s.inverse() == id);
  GroupElement g(2, 1, 1, 1);
  CHECK(g.inverse() * g == id);
  CHECK(g.frobenius_sq() == 7);

  std::unordered_set<GroupElement, GroupElementHash> set;
  set.insert(GroupElement(2, 1, 1, 1));
  set.insert(GroupElement(-2, -1, -1, -1));
  CHECK(set.size() == 1);
}

TEST_CASE("element ball matches exhaustive scan") {
  auto want = brute_ball(10);
  auto got = enumerate_elements(10.0);
  REQUIRE(got.size() == want.size());

  std::set<Entries> got_set;
  for (const auto& g : got) {
    CHECK(g.a * g.d - g.b * g.c == 1);
    CHECK(g.frobenius_sq() <= 100);
    got_set.insert(entries(g));
  }
  CHECK(got_set == want);

  // canonical order, no duplicates
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
}

TEST_CASE("streaming enumeration visits the same ball") {
  auto listed = enumerate_elements(9.0);
  std::set<Entries> seen;
  size_t visits = 0;
  for_each_element(9.0, [&](const GroupElement& g) {
    ++visits;
    seen.insert(entries(g));
  });
  CHECK(visits == seen.size());  // no duplicates
  REQUIRE(seen.size() == listed.size());
  for (const auto& g : listed) CHECK(seen.count(entries(g)) == 1);
}

TEST_CASE("element cap is enforced") {
  CHECK_THROWS_AS(enumerate_elements(200.0, 100), const Error&);
}

TEST_CASE("parabolic cosets") {
  const int q = 6;
  auto reps = parabolic_cosets(q);

  size_t want = 1;  // (c, d) = (0, 1)
  for (int64_t c = 1; c <= q; ++c)
    for (int64_t d = -q; d <= q; ++d)
      if (std::gcd(c, d < 0 ? -d : d) == 1) ++want;
  REQUIRE(reps.size() == want);

  std::set<std::pair<int64_t, int64_t>> rows;
  for (const auto& g : reps) {
    CHECK(g.a * g.d - g.b * g.c == 1);
    CHECK(std::gcd(g.c, g.d < 0 ? -g.d : g.d) == 1);
    rows.insert({g.c, g.d});
  }
  CHECK(rows.size() == reps.size());  // distinct cosets
}

TEST_CASE("hyperbolic cosets are reduced and distinct") {
  const auto& fix = standard_fixtures();
  const auto& data = fix.gamma_21_11;
  auto reps = hyperbolic_cosets(data, 12.0);
  REQUIRE(reps.size() > 20);

  MoebiusReal unscale = data.scaling.inverse();
  UhpPoint z0(0.0, 2.0);
  for (const auto& g : reps) {
    double rho = std::log(std::abs(
        apply(unscale * g.as_moebius(), z0).as_complex()));
    CHECK(rho >= -1e-12);
    CHECK(rho < data.length + 1e-12);
  }

  // no two representatives differ by a power of gamma
  std::set<Entries> powers;
  GroupElement p;
  for (int k = 0; k <= 8; ++k) {
    powers.insert(entries(p));
    powers.insert(entries(p.inverse()));
    p = p * data.gamma;
  }
  size_t n = std::min<size_t>(reps.size(), 40);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      CHECK(powers.count(entries(reps[i] * reps[j].inverse())) == 0);
}

TEST_CASE("elliptic cosets pick one representative per orbit") {
  const auto& fix = standard_fixtures();

  // order-2 stabiliser is norm-preserving, so orbits fill the whole ball
  auto reps2 = elliptic_cosets(fix.at_i, 10.0);
  auto ball = enumerate_elements(10.0);
  CHECK(reps2.size() * 2 == ball.size());
  std::set<Entries> in_list;
  for (const auto& g : reps2) in_list.insert(entries(g));
  for (const auto& g : reps2) {
    size_t hits = in_list.count(entries(g)) +
                  in_list.count(entries(fix.at_i.generator * g));
    CHECK(hits == 1);
  }

  // order-3 point: orbit membership still unique where the orbit stays
  // inside the ball
  auto reps3 = elliptic_cosets(fix.at_rho, 10.0);
  std::set<Entries> in3;
  for (const auto& g : reps3) in3.insert(entries(g));
  CHECK(in3.size() == reps3.size());
  const GroupElement& gen = fix.at_rho.generator;
  for (const auto& g : reps3) {
    size_t hits = in3.count(entries(g)) + in3.count(entries(gen * g)) +
                  in3.count(entries(gen * gen * g));
    CHECK(hits == 1);
  }
}

TEST_CASE("standard fixtures") {
  const auto& fix = standard_fixtures();

  CHECK(fix.gamma_21_11.gamma == GroupElement(2, 1, 1, 1));
  CHECK(fix.gamma_21_11.length ==
        doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-15));

  // scaling conjugates gamma to the dilation diag(e^{l/2}, e^{-l/2})
  MoebiusReal conj = fix.gamma_21_11.scaling.inverse() *
                     fix.gamma_21_11.gamma.as_moebius() *
                     fix.gamma_21_11.scaling;
  CHECK(std::abs(conj.b) < 1e-12);
  CHECK(std::abs(conj.c) < 1e-12);
  CHECK(std::abs(conj.a) ==
        doctest::Approx(std::exp(fix.gamma_21_11.length / 2)).epsilon(1e-12));

  // elliptic fixed points and torsion orders
  const GroupElement id;
  CHECK(fix.at_i.order == 2);
  CHECK(fix.at_i.generator * fix.at_i.generator == id);
  UhpPoint i_img = apply(fix.at_i.scaling, UhpPoint(0.0, 1.0));
  CHECK(std::abs(i_img.as_complex() - fix.at_i.point.as_complex()) < 1e-14);
  UhpPoint i_fixed = apply(fix.at_i.generator.as_moebius(), fix.at_i.point);
  CHECK(std::abs(i_fixed.as_complex() - fix.at_i.point.as_complex()) < 1e-14);

  CHECK(fix.at_rho.order == 3);
  GroupElement r = fix.at_rho.generator;
  CHECK(r * r * r == id);
  CHECK(std::abs(fix.at_rho.point.as_complex() -
                 Complex(0.5, std::sqrt(3.0) / 2)) < 1e-15);
  UhpPoint r_fixed = apply(r.as_moebius(), fix.at_rho.point);
  CHECK(std::abs(r_fixed.as_complex() - fix.at_rho.point.as_complex()) <
        1e-14);

  CHECK(fix.infinity.width == 1.0);
  CHECK(fix.infinity.generator == GroupElement(1, 1, 0, 1));
}

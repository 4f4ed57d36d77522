#include <doctest.h>

#include "oracle_helpers.hpp"
#include "primeplet/errors.hpp"
#include "primeplet/multiplet.hpp"

using namespace primeplet;

TEST_CASE("extend_regular canonical runs") {
  RegularMultiplet m = extend_regular(17);
  CHECK(m.length == 16);
  CHECK(m.members.front() == 17);
  CHECK(m.members.back() == 257);
  CHECK(m.maximal);

  m = extend_regular(41);
  CHECK(m.length == 40);
  CHECK(m.members.back() == 1601);

  m = extend_regular(11);
  CHECK(m.length == 10);
  CHECK(m.members.back() == 101);

  CHECK_THROWS_AS(extend_regular(15), ValidationError);
}

TEST_CASE("difference law holds on every emitted run") {
  for (const auto& m : find_regular(4, 20000)) {
    for (std::size_t j = 0; j + 1 < m.members.size(); ++j) {
      CHECK(m.members[j + 1] - m.members[j] == 2 * (j + 1));
    }
  }
}

TEST_CASE("runs from the polynomial cap: start p reaches exactly p-1") {
  for (std::uint64_t p : {2, 3, 5, 11, 17, 41}) {
    CHECK(extend_regular(p).length == p - 1);
  }
}

TEST_CASE("census against the naive oracle") {
  auto fast = find_regular(5, 20000);
  std::vector<std::pair<std::uint64_t, std::size_t>> naive;
  for (std::uint64_t s : oracle::sieve(20000)) {
    auto run = oracle::naive_regular_run(s);
    if (run.size() >= 5) naive.emplace_back(s, run.size());
  }
  REQUIRE(fast.size() == naive.size());
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].start == naive[i].first);
    CHECK(fast[i].length == naive[i].second);
  }
}

TEST_CASE("decuplets below 600") {
  auto runs = find_regular(10, 600);
  std::vector<std::uint64_t> starts;
  for (const auto& m : runs) starts.push_back(m.start);
  CHECK(starts == std::vector<std::uint64_t>{11, 17, 41});
}

TEST_CASE("16-plets below 100") {
  auto runs = find_regular(16, 100);
  std::vector<std::uint64_t> starts;
  for (const auto& m : runs) starts.push_back(m.start);
  CHECK(starts == std::vector<std::uint64_t>{17, 41});
  CHECK(runs[0].family == "E");
  CHECK(runs[1].family == "E");
}

TEST_CASE("monotone nesting of census start sets") {
  auto lens = {4u, 5u, 6u, 7u};
  std::vector<std::vector<std::uint64_t>> sets;
  for (unsigned k : lens) {
    std::vector<std::uint64_t> starts;
    for (const auto& m : find_regular(k, 50000)) starts.push_back(m.start);
    sets.push_back(starts);
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::uint64_t s : sets[i]) {
      CHECK(std::find(sets[i - 1].begin(), sets[i - 1].end(), s) != sets[i - 1].end());
    }
  }
}

TEST_CASE("threaded search returns the identical census") {
  auto seq = find_regular(5, 150000, 1);
  auto par = find_regular(5, 150000, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].start == par[i].start);
    CHECK(seq[i].length == par[i].length);
  }
}

TEST_CASE("almost-regular runs") {
  // max_missing = 0 reduces exactly to find_regular
  auto strict = find_regular(5, 5000);
  auto almost0 = find_almost_regular(5, 5000, 0);
  REQUIRE(strict.size() == almost0.size());
  for (std::size_t i = 0; i < strict.size(); ++i) {
    CHECK(strict[i].start == almost0[i].start);
    CHECK(strict[i].length == almost0[i].span);
    CHECK(almost0[i].missing_indices.empty());
  }

  // every strict run start appears among the almost runs
  auto almost1 = find_almost_regular(7, 600, 1);
  for (std::uint64_t want : {11, 17, 41}) {
    bool found = false;
    for (const auto& m : almost1)
      if (m.start == want) found = true;
    CHECK(found);
  }

  // 13 -> 13, 15*, 19, 25 stops the budget; span covers through 19
  auto runs13 = find_almost_regular(3, 13, 1);
  bool saw13 = false;
  for (const auto& m : runs13) {
    if (m.start != 13) continue;
    saw13 = true;
    CHECK(m.span == 3);
    CHECK(m.missing_indices == std::vector<std::uint64_t>{1});
    CHECK(m.members == std::vector<std::uint64_t>{13, 19});
  }
  CHECK(saw13);

  CHECK_THROWS_AS(find_almost_regular(5, 100, 3), ValidationError);
}

TEST_CASE("family evaluations") {
  FamilyRun r = family_multiplet({FamilyKind::E, 17, 0, 0});
  CHECK(r.values.size() == 16);
  CHECK(r.values.front() == 17);
  CHECK(r.values.back() == 257);

  r = family_multiplet({FamilyKind::f, 29, 0, 0});
  CHECK(r.values.size() == 29);
  CHECK(r.values.back() == 29 + 2 * 28 * 28);

  r = family_multiplet({FamilyKind::F, 13, 0, 0});
  CHECK(r.values == std::vector<std::uint64_t>{7, 11, 19, 31, 47, 67});

  r = family_multiplet({FamilyKind::G, 3, 5, 0});
  CHECK(r.values == std::vector<std::uint64_t>{2});  // degenerate domain {0}

  r = family_multiplet({FamilyKind::G, 11, 17, 0});
  CHECK(r.values == std::vector<std::uint64_t>{7, 29, 73, 139, 227, 337});

  FamilyTag g677;
  g677.kind = FamilyKind::g;
  g677.d = 677;
  r = family_multiplet(g677);
  CHECK(r.values ==
        std::vector<std::uint64_t>{167, 163, 157, 149, 139, 127, 113, 97, 79, 59, 37});
  CHECK(r.xs.front() == 2);
  CHECK(r.xs.back() == 12);

  // strict domain bound: x < sqrt(d-1)/2, so d=101 stops at x=4
  FamilyTag g101;
  g101.kind = FamilyKind::g;
  g101.d = 101;
  r = family_multiplet(g101);
  CHECK(r.xs.back() == 4);

  CHECK_THROWS_AS(family_multiplet({FamilyKind::E, 7, 0, 0}), ValidationError);
  CHECK_THROWS_AS(family_multiplet({FamilyKind::G, 3, 7, 0}), ValidationError);
}

TEST_CASE("every declared family parameter evaluates clean") {
  for (auto p : family_params_E()) CHECK_NOTHROW(family_multiplet({FamilyKind::E, p, 0, 0}));
  for (auto p : family_params_f()) CHECK_NOTHROW(family_multiplet({FamilyKind::f, p, 0, 0}));
  for (auto p : family_params_F()) CHECK_NOTHROW(family_multiplet({FamilyKind::F, p, 0, 0}));
  for (auto [p, q] : family_params_G())
    CHECK_NOTHROW(family_multiplet({FamilyKind::G, p, q, 0}));
  for (auto d : family_params_g()) {
    FamilyTag t;
    t.kind = FamilyKind::g;
    t.d = d;
    CHECK_NOTHROW(family_multiplet(t));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "demflag/dyck.hpp"

using demflag::AdmissiblePairSet;
using demflag::BigInt;
using demflag::DyckPath;
using demflag::EnumerateOptions;
using demflag::QPolynomial;

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt value = 1;
  for (int i = 0; i < k; ++i) value = value * (n - i) / (i + 1);
  return value;
}

// Reflection-principle count of lattice words of length s ending at height n.
BigInt ballot_count(int s, int n) {
  if (n < 0 || n > s || (s - n) % 2 != 0) return 0;
  const int k = (s - n) / 2;
  return binomial(s, k) - binomial(s, k - 1);
}

std::vector<DyckPath> naive_admissible(int s, int n, const AdmissiblePairSet& pairs,
                                       int prefix_ups = 0) {
  std::vector<DyckPath> out;
  demflag::for_each_path(s, n, EnumerateOptions{}, [&](const DyckPath& p) {
    for (int i = 1; i <= prefix_ups; ++i) {
      if (i > p.length() || !p.step_is_up(i)) return;
    }
    if (prefix_ups > p.length()) return;
    if (demflag::is_admissible(p, pairs)) out.push_back(p);
  });
  return out;
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(DyckPath::from_string("011"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::from_string("1000"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::from_string("10x"), std::invalid_argument);
  const DyckPath p = DyckPath::from_string("10111");
  CHECK(p.length() == 5);
  CHECK(p.end_height() == 3);
  CHECK(p.max_height() == 3);
  CHECK(p.down_steps() == 1);
  CHECK(p.to_string() == "10111");
  CHECK(DyckPath().length() == 0);
  CHECK(DyckPath().end_height() == 0);
}

TEST_CASE("comaj, maj and des on the worked examples") {
  CHECK(DyckPath::from_string("10111").comaj() == 4);
  CHECK(DyckPath::from_string("11011").comaj() == 3);
  for (int n = 0; n <= 6; ++n) {
    CHECK(DyckPath(std::vector<uint8_t>(n, 1)).comaj() == 0);
  }
  // k up-down pairs then n up-steps: comaj = k(n+k).
  for (int k = 0; k <= 5; ++k) {
    for (int n = 0; n <= 5; ++n) {
      std::vector<uint8_t> steps;
      for (int i = 0; i < k; ++i) {
        steps.push_back(1);
        steps.push_back(0);
      }
      steps.insert(steps.end(), n, 1);
      CHECK(DyckPath(steps).comaj() == k * (n + k));
    }
  }
}

TEST_CASE("maj + comaj = des * length") {
  for (int s = 0; s <= 12; ++s) {
    for (int n = s % 2; n <= s; n += 2) {
      demflag::for_each_path(s, n, EnumerateOptions{}, [&](const DyckPath& p) {
        CHECK(p.maj() + p.comaj() == p.des() * p.length());
      });
    }
  }
}

TEST_CASE("peaks and valleys with the endpoint convention") {
  // (0,0)->(3,3)->(5,1)->(8,4)->(12,0)->(17,5)->(20,2)
  const DyckPath figure1 = DyckPath::from_string("11100111000011111000");
  CHECK(figure1.peaks().size() == 3);
  CHECK(figure1.valleys().size() == 3);
  CHECK(figure1.peaks()[0] == DyckPath::Point{3, 3});
  CHECK(figure1.valleys()[2] == DyckPath::Point{20, 2});  // endpoint after a down-step

  const DyckPath ups = DyckPath::from_string("1111");
  CHECK(ups.peaks().empty());
  CHECK(ups.valleys().empty());

  const DyckPath updown = DyckPath::from_string("10");
  CHECK(updown.peaks() == std::vector<DyckPath::Point>{{1, 1}});
  CHECK(updown.valleys() == std::vector<DyckPath::Point>{{2, 0}});

  // Endpoint preceded by an up-step is never a peak; start is neither.
  CHECK(DyckPath::from_string("11").peaks().empty());
}

TEST_CASE("admissible pair sets match the worked examples") {
  const AdmissiblePairSet a23(2, 3);
  CHECK(a23.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
  CHECK(a23.height_bound() == 3);
  for (int n = 1; n <= 8; ++n) {
    const AdmissiblePairSet ann(n, n);
    CHECK(ann.pairs() == std::vector<std::pair<int, int>>{{0, n}});
    const AdmissiblePairSet a1n(1, n);
    REQUIRE(a1n.pairs().size() == static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(a1n.pairs()[i] == std::pair<int, int>{i, i + 1});
    }
  }
  CHECK(AdmissiblePairSet(5, 3).pairs().empty());  // n < m
  CHECK(AdmissiblePairSet(5, 3).height_bound() == 4);
}

TEST_CASE("the two descriptions of the pair set coincide") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 0; n <= 40; ++n) {
      const AdmissiblePairSet by_difference(m, n);
      const AdmissiblePairSet by_families = AdmissiblePairSet::from_two_family_form(m, n);
      CHECK(by_difference.pairs() == by_families.pairs());
      if (n >= m) {
        CHECK(static_cast<int>(by_difference.pairs().size()) == n - m + 1);
        int expected_b = m;
        int last_a = -1;
        for (const auto& [a, b] : by_difference.pairs()) {
          CHECK(b == expected_b++);
          CHECK(a > last_a);
          last_a = a;
        }
      }
    }
  }
}

TEST_CASE("pair sets satisfy the descending-pair property") {
  // For every (a,b) with b > m there is a pair (a~, b-1) with a~ < a.
  for (int m = 1; m <= 8; ++m) {
    for (int n = 0; n <= 40; ++n) {
      const AdmissiblePairSet pairs(m, n);
      std::map<int, int> a_of_b;
      for (const auto& [a, b] : pairs.pairs()) a_of_b[b] = a;
      for (const auto& [a, b] : pairs.pairs()) {
        if (b == m) continue;
        REQUIRE(a_of_b.count(b - 1) == 1);
        CHECK(a_of_b[b - 1] < a);
      }
    }
  }
}

TEST_CASE("admissibility of the two example paths at n = m = 4") {
  const AdmissiblePairSet pairs(4, 4);
  const DyckPath green = DyckPath::from_string("1111001011000111");
  const DyckPath red = DyckPath::from_string("1111001000110111");
  CHECK(demflag::is_admissible(green, pairs));
  CHECK_FALSE(demflag::is_admissible(red, pairs));
}

TEST_CASE("vacuous admissibility below the level") {
  const AdmissiblePairSet pairs(5, 3);  // empty set, bound 4
  demflag::for_each_path(9, 3, EnumerateOptions{}, [&](const DyckPath& p) {
    CHECK(demflag::is_admissible(p, pairs) == (p.max_height() <= 4));
  });
}

TEST_CASE("enumeration basics") {
  for (int s = 0; s <= 8; ++s) {
    CHECK(demflag::count_paths(s, s) == 1);
    if (s > 0) CHECK(demflag::count_paths(0, s) == 0);
  }
  CHECK(demflag::count_paths(0, 0) == 1);
  CHECK(demflag::count_paths(5, 2) == 0);  // parity
  const AdmissiblePairSet a23(2, 3);
  EnumerateOptions admissible;
  admissible.pairs = &a23;
  const auto d23 = demflag::enumerate_paths(5, 3, admissible);
  REQUIRE(d23.size() == 2);
  CHECK(d23[0].to_string() == "10111");
  CHECK(d23[1].to_string() == "11011");
}

TEST_CASE("enumeration matches the reflection-principle count") {
  for (int s = 0; s <= 16; ++s) {
    for (int n = s % 2; n <= s; n += 2) {
      CHECK(demflag::count_paths(s, n) == ballot_count(s, n));
      CHECK(demflag::count_paths_dp(s, n) == ballot_count(s, n));
    }
  }
}

TEST_CASE("enumeration is in ascending lexicographic order and duplicate-free") {
  for (int s = 0; s <= 10; ++s) {
    for (int n = s % 2; n <= s; n += 2) {
      const AdmissiblePairSet pairs(3, n);
      EnumerateOptions options;
      options.pairs = &pairs;
      const auto paths = demflag::enumerate_paths(s, n, options);
      for (size_t i = 1; i < paths.size(); ++i) {
        CHECK(paths[i - 1].to_string() < paths[i].to_string());
      }
    }
  }
}

TEST_CASE("pruned enumeration equals the direct predicate") {
  for (int m = 1; m <= 4; ++m) {
    for (int s = 0; s <= 10; ++s) {
      for (int n = s % 2; n <= s; n += 2) {
        const AdmissiblePairSet pairs(m, n);
        for (int j : {0, 1, m}) {
          EnumerateOptions options;
          options.pairs = &pairs;
          options.prefix_ups = j;
          CHECK(demflag::enumerate_paths(s, n, options) == naive_admissible(s, n, pairs, j));
          CHECK(demflag::count_paths_dp(s, n, options) ==
                BigInt(naive_admissible(s, n, pairs, j).size()));
        }
      }
    }
  }
}

TEST_CASE("the counting dynamic program matches the walk on random filters") {
  std::mt19937 rng(320498);
  std::uniform_int_distribution<int> pick_s(0, 14);
  std::uniform_int_distribution<int> pick_m(1, 6);
  std::uniform_int_distribution<int> pick_small(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = pick_s(rng);
    const int n = std::min(pick_small(rng) * 2 + s % 2, s);
    const AdmissiblePairSet pairs(pick_m(rng), n);
    EnumerateOptions options;
    if (trial % 3 != 0) options.pairs = &pairs;
    if (trial % 4 == 0) options.height_bound = pick_small(rng);
    options.prefix_ups = pick_small(rng) % 4;
    CHECK(demflag::count_paths_dp(s, n, options) == demflag::count_paths(s, n, options));
  }
}

TEST_CASE("height bound and prefix filters compose") {
  EnumerateOptions options;
  options.height_bound = 2;
  options.prefix_ups = 2;
  const auto paths = demflag::enumerate_paths(6, 0, options);
  std::vector<DyckPath> expected;
  demflag::for_each_path(6, 0, EnumerateOptions{}, [&](const DyckPath& p) {
    if (p.max_height() <= 2 && p.step_is_up(1) && p.step_is_up(2)) expected.push_back(p);
  });
  CHECK(paths == expected);
  // A prefix longer than the path yields nothing.
  EnumerateOptions too_long;
  too_long.prefix_ups = 4;
  CHECK(demflag::enumerate_paths(3, 3, too_long).empty());
  CHECK(demflag::count_paths_dp(3, 3, too_long) == 0);
}

TEST_CASE("admissibility degenerates to pure height bounds") {
  // Below the level the pair set is empty, so only y <= m-1 remains; and
  // once m >= s no path can reach the ceiling, so nothing is filtered.
  for (int m = 2; m <= 6; ++m) {
    for (int s = 0; s <= 10; ++s) {
      for (int n = s % 2; n <= s; n += 2) {
        const AdmissiblePairSet pairs(m, n);
        EnumerateOptions admissible;
        admissible.pairs = &pairs;
        if (n < m) {
          EnumerateOptions bounded;
          bounded.height_bound = m - 1;
          CHECK(demflag::enumerate_paths(s, n, admissible) ==
                demflag::enumerate_paths(s, n, bounded));
        }
        if (m >= s) {
          CHECK(demflag::enumerate_paths(s, n, admissible) ==
                demflag::enumerate_paths(s, n, EnumerateOptions{}));
        }
      }
    }
  }
}

TEST_CASE("eta chain on the worked example") {
  // Peaks (3,3), (6,2), (10,4), (15,5), (17,5).
  const DyckPath p = DyckPath::from_string("11100101110011101011");
  const auto peaks = p.peaks();
  REQUIRE(peaks.size() == 5);
  CHECK(peaks[0] == DyckPath::Point{3, 3});
  CHECK(peaks[1] == DyckPath::Point{6, 2});
  CHECK(peaks[2] == DyckPath::Point{10, 4});
  CHECK(peaks[3] == DyckPath::Point{15, 5});
  CHECK(peaks[4] == DyckPath::Point{17, 5});
  CHECK(demflag::eta_indices(p) == std::vector<int>{1, 3, 4, 5});

  CHECK(demflag::eta_indices(DyckPath::from_string("1011")) == std::vector<int>{1});
  CHECK(demflag::eta_indices(DyckPath::from_string("111")).empty());
}

TEST_CASE("zeta chain") {
  CHECK(demflag::zeta_indices(DyckPath::from_string("1011")) == std::vector<int>{1});
  // Valleys (2,0) and endpoint (7,1); the endpoint valley is weakly above
  // the earlier one, so the chain walks back.
  const DyckPath q = DyckPath::from_string("1011100");
  const auto valleys = q.valleys();
  REQUIRE(valleys.size() == 2);
  CHECK(valleys[0] == DyckPath::Point{2, 0});
  CHECK(valleys[1] == DyckPath::Point{7, 1});
  CHECK(demflag::zeta_indices(q) == std::vector<int>{2, 1});
}

TEST_CASE("psi on the drawn instance") {
  // m=5, k=3, n=6: 111110110011 reflects to 1011100.
  const DyckPath p = DyckPath::from_string("111110110011");
  const DyckPath image = demflag::psi(p, 5, 6);
  CHECK(image.to_string() == "1011100");
  CHECK(p.comaj() == image.comaj() + 3);
  CHECK(demflag::psi_inverse(image, 5, 6) == p);
}

TEST_CASE("psi on a path without down-steps") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= m + 3; ++n) {
      const DyckPath p(std::vector<uint8_t>(n, 1));
      const DyckPath image = demflag::psi(p, m, n);
      CHECK(image == DyckPath(std::vector<uint8_t>(n - m, 1)));
      CHECK(demflag::psi_inverse(image, m, n) == p);
    }
  }
}

TEST_CASE("psi precondition violations throw") {
  CHECK_THROWS_AS(demflag::psi(DyckPath::from_string("10"), 2, 0), std::domain_error);
  CHECK_THROWS_AS(demflag::psi(DyckPath::from_string("0101"), 1, 0), std::invalid_argument);
  // Does not start with m up-steps.
  CHECK_THROWS_AS(demflag::psi(DyckPath::from_string("1011"), 2, 2), std::domain_error);
  CHECK_THROWS_AS(demflag::psi_inverse(DyckPath::from_string("10"), 2, 1), std::domain_error);
}

TEST_CASE("psi is a comaj-shifting bijection on every small domain") {
  for (int m = 1; m <= 6; ++m) {
    for (int s = m; s <= 12; ++s) {
      for (int n = m; n <= s; ++n) {
        if ((s - n) % 2 != 0) continue;
        const AdmissiblePairSet source_pairs(m, n);
        EnumerateOptions source_options;
        source_options.pairs = &source_pairs;
        source_options.prefix_ups = m;
        const auto domain = demflag::enumerate_paths(s, n, source_options);

        const AdmissiblePairSet target_pairs(m, n - m);
        EnumerateOptions target_options;
        target_options.pairs = &target_pairs;
        const auto codomain = demflag::enumerate_paths(s - m, n - m, target_options);

        std::set<std::string> images;
        for (const DyckPath& p : domain) {
          const DyckPath image = demflag::psi(p, m, n);
          CHECK(image.comaj() == p.comaj() - (s - n) / 2);
          CHECK(demflag::is_admissible(image, target_pairs));
          CHECK(image.length() == s - m);
          CHECK(image.end_height() == n - m);
          CHECK(demflag::psi_inverse(image, m, n) == p);
          images.insert(image.to_string());
        }
        CHECK(images.size() == domain.size());    // injective
        CHECK(images.size() == codomain.size());  // onto
      }
    }
  }
}

TEST_CASE("tau on the drawn instance") {
  const DyckPath p = DyckPath::from_string("11101100111");
  const auto [r, image] = demflag::tau(p, 3, 4);
  CHECK(r == 1);
  CHECK(image.to_string() == "111100111");
  CHECK(p.comaj() == image.comaj() + (1 - (r == 0 ? 1 : 0)) * (11 - 3));
}

TEST_CASE("tau with no down-step after the prefix") {
  const DyckPath p = DyckPath::from_string("11101");
  const auto [r, image] = demflag::tau(p, 2, 3);
  CHECK(r == 0);
  CHECK(image == p);
}

TEST_CASE("tau rejects out-of-contract prefixes") {
  CHECK_THROWS_AS(demflag::tau(DyckPath::from_string("1101"), 2, 2), std::domain_error);
  CHECK_THROWS_AS(demflag::tau(DyckPath::from_string("1101"), 0, 3), std::domain_error);
  CHECK_THROWS_AS(demflag::tau(DyckPath::from_string("10"), 2, 3), std::domain_error);
}

TEST_CASE("tau comaj law and codomain, exhaustively") {
  for (int m = 2; m <= 4; ++m) {
    for (int j = 1; j < m; ++j) {
      for (int s = j; s <= 12; ++s) {
        for (int n = s % 2; n <= s; n += 2) {
          const AdmissiblePairSet pairs(m, n);
          EnumerateOptions options;
          options.pairs = &pairs;
          options.prefix_ups = j;
          for (const DyckPath& p : demflag::enumerate_paths(s, n, options)) {
            const auto [r, image] = demflag::tau(p, j, m);
            const int delta = (r == s - j) ? 1 : 0;
            const int expected_prefix = j + 1 - r - delta;
            CHECK(image.length() == s - 2 * r);
            CHECK(demflag::is_admissible(image, pairs));
            for (int i = 1; i <= expected_prefix; ++i) CHECK(image.step_is_up(i));
            CHECK(p.comaj() == image.comaj() + (r == 0 ? 0 : s - j));
          }
        }
      }
    }
  }
}

TEST_CASE("tableau bijection on the drawn example") {
  const DyckPath p = DyckPath::from_string("1101001");
  const demflag::TwoRowTableau t = demflag::to_syt(p);
  CHECK(t.row1 == std::vector<int>{1, 2, 4, 7});
  CHECK(t.row2 == std::vector<int>{3, 5, 6});
  CHECK(t.comaj() == p.comaj());
  CHECK(demflag::syt_to_path(t) == p);
}

TEST_CASE("tableau bijection on all-up paths") {
  const DyckPath p = DyckPath::from_string("11111");
  const demflag::TwoRowTableau t = demflag::to_syt(p);
  CHECK(t.row1 == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(t.row2.empty());
  CHECK(t.comaj() == 0);
}

TEST_CASE("tableau bijection preserves comaj and is bijective") {
  for (int s = 0; s <= 12; ++s) {
    for (int n = s % 2; n <= s; n += 2) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      demflag::for_each_path(s, n, EnumerateOptions{}, [&](const DyckPath& p) {
        const demflag::TwoRowTableau t = demflag::to_syt(p);
        CHECK(t.comaj() == p.comaj());
        CHECK(static_cast<int>(t.row1.size()) == (s + n) / 2);
        CHECK(demflag::syt_to_path(t) == p);
        seen.insert({t.row1, t.row2});
      });
      CHECK(seen.size() == static_cast<size_t>(ballot_count(s, n)));
    }
  }
}

TEST_CASE("malformed tableaux are rejected") {
  CHECK_THROWS_AS(demflag::syt_to_path({{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(demflag::syt_to_path({{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(demflag::syt_to_path({{2, 3}, {1}}), std::invalid_argument);  // column
}

TEST_CASE("extremal comaj") {
  for (int m = 2; m <= 6; ++m) {
    CHECK(demflag::extremal_comaj(m, 3, 5).max_comaj == 4);
    for (int n = 0; n <= 4; ++n) {
      CHECK(demflag::extremal_comaj(m, n, n).max_comaj == 0);
    }
  }
  CHECK_THROWS_AS(demflag::extremal_comaj(3, 0, 7), std::domain_error);
  CHECK_THROWS_AS(demflag::extremal_comaj(1, 0, 4), std::domain_error);

  // Minimum over admissible paths at n = 0, against brute force.
  for (int m = 2; m <= 5; ++m) {
    for (int s = 0; s <= 10; s += 2) {
      const AdmissiblePairSet pairs(m, 0);
      EnumerateOptions options;
      options.pairs = &pairs;
      int best = -1;
      demflag::for_each_path(s, 0, options, [&](const DyckPath& p) {
        if (best < 0 || p.comaj() < best) best = p.comaj();
      });
      const demflag::ExtremalComaj extremes = demflag::extremal_comaj(m, 0, s);
      CHECK(extremes.min_path.comaj() == best);
      CHECK(demflag::is_admissible(extremes.min_path, pairs));
    }
  }
}

TEST_CASE("maximum comaj is attained uniquely by the zigzag-then-rise path") {
  for (int m = 2; m <= 4; ++m) {
    for (int s = 0; s <= 10; ++s) {
      for (int n = s % 2; n <= s; n += 2) {
        const AdmissiblePairSet pairs(m, n);
        EnumerateOptions options;
        options.pairs = &pairs;
        const demflag::ExtremalComaj extremes = demflag::extremal_comaj(m, n, s);
        int hits = 0;
        demflag::for_each_path(s, n, options, [&](const DyckPath& p) {
          CHECK(p.comaj() <= extremes.max_comaj);
          if (p.comaj() == extremes.max_comaj) ++hits;
        });
        CHECK(hits == 1);
        CHECK(demflag::is_admissible(extremes.min_path, pairs));
        CHECK(extremes.min_path.end_height() == n);
        CHECK(extremes.min_path.length() == s);
      }
    }
  }
}

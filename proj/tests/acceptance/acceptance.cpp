// Acceptance suite: one PASS/FAIL line per criterion, each with its own time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/cantor.hpp"
#include "fixtures.hpp"

using namespace cantor;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

const std::filesystem::path kData = CANTOR_DATA_DIR;

std::vector<LevelPoint> all_points(const RadixSystem& sys, std::size_t level) {
  const std::uint64_t size = *sys.level_size_u64(level);
  std::vector<LevelPoint> out;
  out.reserve(size);
  for (std::uint64_t r = 0; r < size; ++r) out.push_back(unrank(sys, level, BigInt(r)));
  return out;
}

// 1. Exact pushforward on every interval [a, b') with a < b, |C_n| <= 10^4.
Outcome pushforward_exhaustive() {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  std::uint64_t end_to_end = 0;
  std::mt19937_64 rng(1);
  for (const auto& [name, sys] : fixtures::test_systems()) {
    for (std::size_t level = 1; level <= sys.max_level_within(10'000); ++level) {
      const auto points = all_points(sys, level);
      std::vector<BigRational> phis;
      std::vector<LevelPoint> preds;
      phis.reserve(points.size());
      preds.reserve(points.size());
      for (const auto& p : points) {
        phis.push_back(phi(p));
        preds.push_back(p.is_zero() ? p : predecessor(p));
      }
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          const BigRational haar = haar_measure(points[i], preds[j]);
          failures += !(haar == phis[j] - phis[i]);
          ++pairs;
        }
      }
      // The full set construction and report path: every pair on small levels, a sample otherwise.
      const bool every = points.size() <= 400;
      const std::size_t samples = every ? 0 : 20'000;
      auto check = [&](std::size_t i, std::size_t j) {
        const auto s = from_paper_endpoints(points[i], points[j]);
        const auto r = check_pushforward_interval(points[i], points[j]);
        const bool same_set = s.intervals().size() == 1 && s.intervals()[0] == ClopenInterval(points[i], preds[j]);
        failures += !(r.equal && same_set && r.haar_value == haar_measure(s) && r.lebesgue_value == phis[j] - phis[i]);
        ++end_to_end;
      };
      if (every) {
        for (std::size_t i = 0; i < points.size(); ++i) {
          for (std::size_t j = i + 1; j < points.size(); ++j) check(i, j);
        }
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        for (std::size_t k = 0; k < samples; ++k) {
          std::size_t i = pick(rng);
          std::size_t j = pick(rng);
          if (i == j) continue;
          if (i > j) std::swap(i, j);
          check(i, j);
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " interval pairs, " << failures << " failures (" << end_to_end
    << " also checked through check_pushforward_interval)";
  return {failures == 0 && pairs > 0, d.str()};
}

// 2. Haar measure equals Lebesgue measure of the image for random canonical clopen sets.
Outcome openmap_random() {
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (const auto& [name, sys] : fixtures::test_systems()) {
    std::mt19937_64 rng(2000 + cases);
    for (int k = 0; k < 1000; ++k) {
      const auto s = fixtures::random_set(sys, rng, 8, 0, 8);
      failures += !(haar_measure(s) == lebesgue_of_image(s) && check_openmap(s).equal);
      ++cases;
    }
  }
  return {failures == 0, std::to_string(cases) + " sets, " + std::to_string(failures) + " failures"};
}

// 3. Abelianized radices multiply out to the quotient orders.
Outcome tower_cardinality() {
  std::ostringstream d;
  bool ok = true;
  for (const char* name : {"z4tower", "d4tower", "z12tower", "q8tower"}) {
    const Tower t = io::load_tower(kData / "towers" / name);
    const RadixSystem sys = abelianize_tower(t);
    for (std::size_t k = 1; k <= t.levels().size(); ++k) ok = ok && sys.level_size(k) == t.levels()[k - 1].order();
    d << name << "->" << sys.describe() << "; ";
  }
  return {ok, d.str()};
}

// 4. Surjective homomorphisms push uniform to uniform.
Outcome haar_pushforward_homs() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  const auto uniform_ok = [&](const GroupHom& f) {
    const auto r = uniform_pushforward_check(f);
    const BigRational expected(1, static_cast<std::int64_t>(f.target().order()));
    bool all = r.equal && r.expected == expected && r.masses.size() == f.target().order();
    for (const auto& m : r.masses) all = all && m == expected;
    ++checked;
    failures += !all;
  };
  for (const char* name : {"z4tower", "d4tower", "z12tower", "q8tower"}) {
    const Tower t = io::load_tower(kData / "towers" / name);
    for (const auto& step : t.steps()) uniform_ok(step);
    for (std::size_t k = 0; k + 1 < t.steps().size(); ++k) uniform_ok(compose(t.steps()[k + 1], t.steps()[k]));
  }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d == 0) divisors.push_back(d);
    }
    const std::size_t n = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    std::vector<std::size_t> units;
    for (std::size_t u = 0; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(u);
    }
    const std::size_t u = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
    std::vector<Element> map(m);
    for (std::size_t x = 0; x < m; ++x) map[x] = static_cast<Element>((u * x) % n);
    const GroupHom f(cyclic_group(m), cyclic_group(n), map);
    if (validate_hom(f)) {
      ++failures;
      continue;
    }
    uniform_ok(f);
  }
  return {failures == 0, std::to_string(checked) + " homomorphisms, " + std::to_string(failures) + " failures"};
}

// 5. Embedding-projection laws across level pairs.
Outcome ep_laws() {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  for (const auto& [name, sys] : fixtures::test_systems()) {
    const std::size_t top = sys.max_level_within(10'000);
    for (std::size_t m = 0; m <= top; ++m) {
      const auto fine = all_points(sys, m);
      for (std::size_t n = 0; n <= m; ++n) {
        for (const auto& x : all_points(sys, n)) {
          failures += !(project(embed(x, m), n) == x);
          ++checks;
        }
        for (const auto& q : fine) {
          const Order o = lex_compare(embed(project(q, n), m), q).order;
          failures += !(o == Order::Less || o == Order::Equal);
          ++checks;
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " law instances, " + std::to_string(failures) + " failures"};
}

// 6. φ is strictly monotone for the lexicographic order.
Outcome phi_monotone() {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  for (const auto& [name, sys] : fixtures::test_systems()) {
    for (std::size_t level = 1; level <= sys.max_level_within(1'000); ++level) {
      const auto points = all_points(sys, level);
      std::vector<BigRational> phis;
      for (const auto& p : points) phis.push_back(phi(p));
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
          const Order o = lex_compare(points[i], points[j]).order;
          const int s = (phis[i] - phis[j]).sign();
          failures += !((o == Order::Less && s < 0) || (o == Order::Equal && s == 0) || (o == Order::Greater && s > 0));
          ++pairs;
        }
      }
    }
  }
  return {failures == 0, std::to_string(pairs) + " ordered pairs, " + std::to_string(failures) + " failures"};
}

// 7. Round trip between radix systems.
Outcome iso_round_trip() {
  constexpr std::size_t kMaxK = 64;
  const auto systems = fixtures::test_systems();
  std::size_t total = 0;
  std::size_t terminated = 0;
  std::size_t absorbable = 0;
  std::size_t absorbable_terminated = 0;
  std::size_t failures = 0;
  std::mt19937_64 rng(7);
  for (const auto& from : systems) {
    for (const auto& to : systems) {
      if (from.system == to.system) continue;
      const BigInt target_product = to.system.level_size(kMaxK);
      std::vector<std::pair<BigRational, LevelPoint>> done;
      for (int k = 0; k < 1000; ++k) {
        const std::size_t level = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const LevelPoint x = fixtures::random_point(from.system, level, rng);
        const BigRational v = phi(x);
        const ConversionResult r = iso_point(x, from.system, to.system, kMaxK);
        const bool absorbs = target_product % v.denominator() == 0;
        ++total;
        absorbable += absorbs;
        if (r.status == ConversionStatus::Terminated) {
          ++terminated;
          absorbable_terminated += absorbs;
          failures += !(absorbs && phi(r.digits) == v && r.value && *r.value == v);
          done.emplace_back(v, r.digits);
        } else {
          // Never wrong: truncated digits are the leading digits of v.
          const BigRational lo = phi(r.digits);
          const BigRational width(BigInt(1), to.system.level_size(r.digits.level()));
          failures += !(!absorbs && r.consumed == kMaxK && lo <= v && v < lo + width);
        }
      }
      std::ranges::sort(done, [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < done.size(); ++i) {
        const auto c = compare(done[i - 1].second, done[i].second);
        failures += done[i - 1].first == done[i].first ? !(c == 0) : !(c < 0);
      }
    }
  }
  const double rate = absorbable ? 100.0 * static_cast<double>(absorbable_terminated) / static_cast<double>(absorbable) : 0;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(1);
  d << total << " conversions, " << failures << " failures; terminated " << absorbable_terminated << "/" << absorbable
    << " absorbable (" << rate << "%), " << terminated << "/" << total << " overall ("
    << 100.0 * static_cast<double>(terminated) / static_cast<double>(total) << "%), rest TRUNCATED";
  return {failures == 0 && rate >= 95.0, d.str()};
}

// 8. Atoms of generated Boolean algebras partition C.
Outcome stone_partition() {
  std::size_t families = 0;
  std::size_t failures = 0;
  std::mt19937_64 rng(8);
  for (const auto& [name, sys] : fixtures::test_systems()) {
    for (int k = 0; k < 200; ++k, ++families) {
      std::vector<ClopenSet> gens;
      const int count = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int g = 0; g < count; ++g) gens.push_back(fixtures::random_set(sys, rng, 6, 0, 6));
      const auto atoms = partition_atoms(gens, sys);
      bool ok = true;
      BigRational total;
      ClopenSet cover = ClopenSet::empty(sys, 0);
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        ok = ok && !atoms[i].is_empty();
        total += haar_measure(atoms[i]);
        cover = set_union(cover, atoms[i]);
        for (std::size_t j = i + 1; j < atoms.size(); ++j) ok = ok && set_intersect(atoms[i], atoms[j]).is_empty();
      }
      for (const auto& g : gens) {
        ClopenSet rebuilt = ClopenSet::empty(sys, 0);
        for (const auto& a : atoms) {
          if (set_difference(a, g).is_empty()) rebuilt = set_union(rebuilt, a);
        }
        ok = ok && rebuilt == g;
      }
      failures += !(ok && cover.is_full() && total == BigRational(1));
    }
  }
  return {failures == 0, std::to_string(families) + " generator families, " + std::to_string(failures) + " failures"};
}

// 9. Haar samples pushed through φ look uniform; a biased sampler does not.
Outcome ks_uniformity() {
  std::ostringstream d;
  d.precision(5);
  bool ok = true;
  double worst = 0;
  double weakest_control = 1;
  for (const auto& [name, sys] : fixtures::test_systems()) {
    for (std::uint64_t seed : {42ULL, 7ULL, 2024ULL}) {
      SamplerConfig cfg{sys, 40, 100'000, seed, std::nullopt};
      const KsReport r = run_uniformity_test(cfg);
      ok = ok && r.pass;
      worst = std::max(worst, r.statistic);
      cfg.first_digit_zero_mass = 0.6;
      const KsReport control = run_uniformity_test(cfg);
      ok = ok && !control.pass;
      weakest_control = std::min(weakest_control, control.statistic);
    }
  }
  d << "max D=" << worst << " < " << kKsCoefficient01 / std::sqrt(1e5) << " over 12 runs; biased control min D="
    << weakest_control << " (all fail)";
  return {ok, d.str()};
}

// 10. Haar measure is unchanged by refinement.
Outcome level_consistency_random() {
  std::size_t failures = 0;
  std::mt19937_64 rng(10);
  const auto systems = fixtures::test_systems();
  for (int k = 0; k < 500; ++k) {
    const auto& sys = systems[static_cast<std::size_t>(k) % systems.size()].system;
    const auto s = fixtures::random_set(sys, rng, 8, 0, 8);
    const std::size_t m = s.level() + std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    failures += !(level_consistency(s, m) && haar_measure(refine(s, m)) == haar_measure(s));
  }
  return {failures == 0, "500 (set, level) pairs, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const std::vector<Criterion> criteria{
      {1, "exact pushforward on clopen intervals", 30, pushforward_exhaustive},
      {2, "Haar equals Lebesgue of the image on clopen sets", 10, openmap_random},
      {3, "abelianized tower cardinality law", 1, tower_cardinality},
      {4, "uniform pushforward through surjective homomorphisms", 5, haar_pushforward_homs},
      {5, "embedding-projection laws", 10, ep_laws},
      {6, "strict monotonicity of phi", 5, phi_monotone},
      {7, "round trip between radix systems", 10, iso_round_trip},
      {8, "clopen partition atoms", 5, stone_partition},
      {9, "KS uniformity of sampled phi values", 30, ks_uniformity},
      {10, "level consistency of Haar measure", 5, level_consistency_random},
  };
  int failed = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::ranges::find(only, c.id) == only.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s [%.2fs / limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}

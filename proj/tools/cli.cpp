#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cantor/cantor.hpp"

namespace cantor::cli {

namespace {

using Handler = std::function<int(std::ostream&, std::ostream&)>;

std::string join_digits(std::span<const Digit> digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) out += (i ? "," : "") + std::to_string(digits[i]);
  return out;
}

LevelPoint point_at_level(const RadixSystem& sys, const std::string& text, std::size_t level, const char* flag) {
  LevelPoint p(sys, io::parse_digits(text));
  if (p.level() > level) {
    throw Error(ErrorKind::InvalidArgument, std::string(flag) + " has more digits than --level " + std::to_string(level));
  }
  return embed(p, level);
}

/// --set FILE, or --lo/--hi/--level for a single interval.
struct SetSource {
  std::string set_file;
  std::string lo;
  std::string hi;
  std::optional<std::size_t> level;

  void attach(CLI::App* cmd) {
    cmd->add_option("--set", set_file, "clopen set JSON file");
    cmd->add_option("--lo", lo, "lower prefix, comma-separated digits");
    cmd->add_option("--hi", hi, "upper prefix, comma-separated digits");
    cmd->add_option("--level", level, "level of --lo/--hi");
  }

  ClopenSet load(const RadixSystem& sys) const {
    if (!set_file.empty()) return io::load_clopen(set_file, sys);
    if (!level) throw Error(ErrorKind::InvalidArgument, "give --set or --lo/--hi/--level");
    return ClopenSet::interval(point_at_level(sys, lo, *level, "--lo"), point_at_level(sys, hi, *level, "--hi"));
  }
};

void print_verdict(std::ostream& out, bool pass, const std::string& detail) {
  out << (pass ? "PASS" : "FAIL") << ": " << detail << '\n';
}

// ---------------------------------------------------------------------------

Handler add_phi(CLI::App& app) {
  auto* cmd = app.add_subcommand("phi", "exact value of the Cantor map on a compact point");
  auto system = std::make_shared<std::string>();
  auto digits = std::make_shared<std::string>();
  auto cocompact = std::make_shared<bool>(false);
  cmd->add_option("--system", *system, "radix system JSON")->required();
  cmd->add_option("--digits", *digits, "comma-separated digits")->required();
  cmd->add_flag("--cocompact", *cocompact, "evaluate at x' instead of x");
  return [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = io::load_radix(*system);
    LevelPoint p(sys, io::parse_digits(*digits));
    out << (*cocompact ? phi_cocompact(CoCompactPoint(p)) : phi(p)) << '\n';
    return kExitOk;
  };
}

Handler add_measure(CLI::App& app) {
  auto* cmd = app.add_subcommand("measure", "Haar measure of a clopen set");
  auto system = std::make_shared<std::string>();
  auto source = std::make_shared<SetSource>();
  cmd->add_option("--system", *system, "radix system JSON")->required();
  source->attach(cmd);
  return [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = io::load_radix(*system);
    out << haar_measure(source->load(sys)) << '\n';
    return kExitOk;
  };
}

void add_check_pushforward(CLI::App* cmd, Handler& handler) {
  auto system = std::make_shared<std::string>();
  auto level = std::make_shared<std::size_t>(0);
  auto exhaustive = std::make_shared<bool>(false);
  auto a = std::make_shared<std::string>();
  auto b = std::make_shared<std::string>();
  auto max_rows = std::make_shared<std::size_t>(20);
  cmd->add_option("--system", *system, "radix system JSON")->required();
  cmd->add_option("--level", *level, "quotient level n")->required();
  auto* ex = cmd->add_flag("--exhaustive", *exhaustive, "check every pair a < b in C_n");
  auto* opt_a = cmd->add_option("--a", *a, "left endpoint digits");
  auto* opt_b = cmd->add_option("--b", *b, "right endpoint digits");
  cmd->add_option("--max-rows", *max_rows, "table rows to print");
  ex->excludes(opt_a)->excludes(opt_b);
  opt_a->needs(opt_b);
  opt_b->needs(opt_a);

  handler = [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = io::load_radix(*system);
    std::vector<std::pair<LevelPoint, LevelPoint>> pairs;
    if (*exhaustive) {
      const auto size = sys.level_size_u64(*level);
      if (!size || *size > 10'000) throw Error(ErrorKind::LevelTooLarge, "exhaustive check needs |C_n| <= 10000");
      std::vector<LevelPoint> points;
      points.reserve(*size);
      for (std::uint64_t r = 0; r < *size; ++r) points.push_back(unrank(sys, *level, BigInt(r)));
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) pairs.emplace_back(points[i], points[j]);
      }
    } else if (!a->empty() || !b->empty()) {
      pairs.emplace_back(point_at_level(sys, *a, *level, "--a"), point_at_level(sys, *b, *level, "--b"));
    } else {
      throw Error(ErrorKind::InvalidArgument, "give --exhaustive or --a/--b");
    }

    out << "a\tb\thaar\tlebesgue\n";
    std::size_t failures = 0;
    std::size_t printed = 0;
    for (const auto& [lo, hi] : pairs) {
      const PushforwardReport report = check_pushforward_interval(lo, hi);
      failures += !report.equal;
      if (printed < *max_rows || !report.equal) {
        out << lo.to_string() << '\t' << hi.to_string() << '\t' << report.haar_value << '\t' << report.lebesgue_value
            << (report.equal ? "" : "\tMISMATCH") << '\n';
        ++printed;
      }
    }
    if (printed < pairs.size()) out << "... " << pairs.size() - printed << " more rows\n";
    print_verdict(out, failures == 0,
                  std::to_string(pairs.size() - failures) + "/" + std::to_string(pairs.size()) + " intervals agree");
    return failures == 0 ? kExitOk : kExitCheckFailed;
  };
}

void add_check_openmap(CLI::App* cmd, Handler& handler) {
  auto system = std::make_shared<std::string>();
  auto source = std::make_shared<SetSource>();
  cmd->add_option("--system", *system, "radix system JSON")->required();
  source->attach(cmd);
  handler = [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = io::load_radix(*system);
    const ClopenSet s = source->load(sys);
    const PushforwardReport report = check_openmap(s);
    out << "haar=" << report.haar_value << " lebesgue=" << report.lebesgue_value << '\n';
    if (report.witness) {
      out << "witness=[" << report.witness->lo().to_string() << ".." << report.witness->hi().to_string() << "]\n";
    }
    print_verdict(out, report.equal, s.to_string());
    return report.equal ? kExitOk : kExitCheckFailed;
  };
}

Handler add_partition(CLI::App& app) {
  auto* cmd = app.add_subcommand("partition", "atoms of the Boolean algebra generated by clopen sets");
  auto system = std::make_shared<std::string>();
  auto sets = std::make_shared<std::vector<std::string>>();
  cmd->add_option("--system", *system, "radix system JSON")->required();
  cmd->add_option("--set", *sets, "generator clopen set JSON (repeatable)");
  return [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = io::load_radix(*system);
    std::vector<ClopenSet> generators;
    for (const auto& f : *sets) generators.push_back(io::load_clopen(f, sys));
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& atom : partition_atoms(generators, sys)) {
      atoms.push_back({{"set", io::clopen_to_json(atom)}, {"measure", haar_measure(atom).to_string()}});
    }
    out << atoms.dump(2) << '\n';
    return kExitOk;
  };
}

Handler add_tower_validate(CLI::App& app) {
  auto* cmd = app.add_subcommand("tower-validate", "check group axioms, homomorphisms and strictness of a tower");
  auto dir = std::make_shared<std::string>();
  cmd->add_option("--tower", *dir, "tower directory")->required();
  return [=](std::ostream& out, std::ostream&) {
    const io::TowerFiles files = io::load_tower_files(*dir);
    bool ok = true;
    for (std::size_t k = 0; k < files.levels.size(); ++k) {
      const auto v = validate_group(files.levels[k]);
      out << "level " << k + 1 << ": order " << files.levels[k].order() << ' ' << (v ? v->message : "ok") << '\n';
      ok = ok && !v;
    }
    for (std::size_t k = 0; k < files.steps.size(); ++k) {
      const GroupHom& step = files.steps[k];
      out << "step " << k + 1 << ": ";
      if (auto v = validate_hom(step)) {
        out << v->message << '\n';
        ok = false;
        continue;
      }
      const std::size_t kernel = kernel_size(step);
      const bool strict = kernel >= 2;
      out << "kernel " << kernel << (strict ? " ok" : " trivial (tower is not strict)") << '\n';
      ok = ok && strict;
    }
    print_verdict(out, ok, *dir);
    return ok ? kExitOk : kExitCheckFailed;
  };
}

Handler add_tower_abelianize(CLI::App& app) {
  auto* cmd = app.add_subcommand("tower-abelianize", "radix system of the abelian replacement of a tower");
  auto dir = std::make_shared<std::string>();
  auto output = std::make_shared<std::string>();
  cmd->add_option("--tower", *dir, "tower directory")->required();
  cmd->add_option("--output", *output, "also write the radix system JSON here");
  return [=](std::ostream& out, std::ostream&) {
    const RadixSystem sys = abelianize_tower(io::load_tower(*dir));
    out << sys.describe() << '\n';
    if (!output->empty()) std::ofstream(*output) << io::radix_to_json(sys).dump() << '\n';
    return kExitOk;
  };
}

Handler add_iso(CLI::App& app) {
  auto* cmd = app.add_subcommand("iso", "convert a compact point between radix systems");
  auto from = std::make_shared<std::string>();
  auto to = std::make_shared<std::string>();
  auto digits = std::make_shared<std::string>();
  auto precision = std::make_shared<std::size_t>(64);
  cmd->add_option("--from", *from, "source radix system JSON")->required();
  cmd->add_option("--to", *to, "target radix system JSON")->required();
  cmd->add_option("--digits", *digits, "source digits")->required();
  cmd->add_option("--precision", *precision, "maximum target digits");
  return [=](std::ostream& out, std::ostream&) {
    const RadixSystem src = io::load_radix(*from);
    const RadixSystem dst = io::load_radix(*to);
    const LevelPoint x(src, io::parse_digits(*digits));
    const ConversionResult r = iso_point(x, src, dst, *precision);
    out << "digits=" << join_digits(r.digits.digits()) << '\n';
    if (r.status == ConversionStatus::Terminated) {
      out << "status=TERMINATED\nvalue=" << *r.value << '\n';
    } else {
      out << "status=TRUNCATED(" << r.consumed << ")\n";
    }
    return kExitOk;
  };
}

Handler add_sample(CLI::App& app) {
  auto* cmd = app.add_subcommand("sample", "Haar sampling: KS uniformity of φ, or frequency of a clopen set");
  auto system = std::make_shared<std::string>();
  auto n = std::make_shared<std::size_t>(100000);
  auto depth = std::make_shared<std::size_t>(40);
  auto seed = std::make_shared<std::uint64_t>(42);
  auto set = std::make_shared<std::string>();
  auto bias = std::make_shared<std::optional<double>>();
  cmd->add_option("--system", *system, "radix system JSON")->required();
  cmd->add_option("--n", *n, "sample count");
  cmd->add_option("--depth", *depth, "digits per sample");
  cmd->add_option("--seed", *seed, "generator seed");
  cmd->add_option("--set", *set, "clopen set JSON: report membership frequency instead of KS");
  cmd->add_option("--bias", *bias, "control sampler: probability that the first digit is 0");
  return [=](std::ostream& out, std::ostream&) {
    const SamplerConfig cfg{io::load_radix(*system), *depth, *n, *seed, *bias};
    if (!set->empty()) {
      const FrequencyReport r = empirical_vs_exact(io::load_clopen(*set, cfg.system), cfg);
      out << "n=" << r.n << " frequency=" << r.frequency << " exact=" << r.exact << " deviation=" << r.deviation
          << " bound=" << r.bound << '\n';
      print_verdict(out, r.pass, "|frequency - exact| <= 3 sigma");
      return r.pass ? kExitOk : kExitCheckFailed;
    }
    const KsReport r = run_uniformity_test(cfg);
    out << "n=" << r.n << " depth=" << cfg.depth << " seed=" << cfg.seed << " statistic=" << r.statistic
        << " critical=" << r.critical_value << '\n';
    print_verdict(out, r.pass, "KS statistic below c(0.01)/sqrt(n)");
    return r.pass ? kExitOk : kExitCheckFailed;
  };
}

Handler add_staircase(CLI::App& app) {
  auto* cmd = app.add_subcommand("staircase", "CSV of (psi, phi) over C_level: the devil's staircase");
  auto system = std::make_shared<std::string>();
  auto level = std::make_shared<std::size_t>(0);
  auto output = std::make_shared<std::string>();
  cmd->add_option("--system", *system, "radix system JSON")->required();
  cmd->add_option("--level", *level, "quotient level")->required();
  cmd->add_option("--output", *output, "write CSV here instead of stdout");
  return [=](std::ostream& out, std::ostream&) {
    const auto rows = emit_staircase(io::load_radix(*system), *level);
    if (output->empty()) {
      write_staircase_csv(rows, out);
    } else {
      std::ofstream file(*output, std::ios::binary);
      write_staircase_csv(rows, file);
    }
    return kExitOk;
  };
}

}  // namespace

std::vector<StaircaseRow> emit_staircase(const RadixSystem& sys, std::size_t level) {
  const auto size = sys.level_size_u64(level);
  if (!size || *size > kMaxStaircasePoints) {
    throw Error(ErrorKind::LevelTooLarge, "staircase needs |C_n| <= " + std::to_string(kMaxStaircasePoints));
  }
  std::vector<StaircaseRow> rows;
  rows.reserve(*size);
  LevelPoint p = LevelPoint::zero(sys, level);
  for (std::uint64_t k = 0; k < *size; ++k) {
    if (k != 0) p = successor(p);
    rows.push_back({psi_gap_embed(p), phi(p)});
  }
  return rows;
}

void write_staircase_csv(std::span<const StaircaseRow> rows, std::ostream& out) {
  out << "psi,phi,psi_approx,phi_approx\n";
  for (const auto& row : rows) {
    out << row.psi << ',' << row.phi << ',' << row.psi.to_decimal(12) << ',' << row.phi.to_decimal(12) << '\n';
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Haar measure, Cantor maps and finite group towers", "cantor"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto track = [&](const char* name, Handler h) { commands.emplace_back(app.get_subcommand(name), std::move(h)); };
  track("phi", add_phi(app));
  track("measure", add_measure(app));
  {
    Handler h;
    add_check_pushforward(app.add_subcommand("check-pushforward", "Haar measure of [a,b') against φ(b) − φ(a)"), h);
    track("check-pushforward", std::move(h));
    add_check_openmap(app.add_subcommand("check-openmap", "Haar measure of a clopen set against λ of its image"), h);
    track("check-openmap", std::move(h));
  }
  auto* check = app.add_subcommand("check", "exact pushforward checks");
  check->require_subcommand(1);
  {
    Handler h;
    auto* pf = check->add_subcommand("pushforward", "same as check-pushforward");
    add_check_pushforward(pf, h);
    commands.emplace_back(pf, std::move(h));
    auto* om = check->add_subcommand("openmap", "same as check-openmap");
    add_check_openmap(om, h);
    commands.emplace_back(om, std::move(h));
  }
  track("partition", add_partition(app));
  track("tower-validate", add_tower_validate(app));
  track("tower-abelianize", add_tower_abelianize(app));
  track("iso", add_iso(app));
  track("sample", add_sample(app));
  track("staircase", add_staircase(app));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto& [cmd, handler] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return handler(out, err);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace cantor::cli

#include "cantor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cantor::io {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json read_json(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

std::vector<Digit> json_digits(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of integers");
  std::vector<Digit> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(ErrorKind::Parse, std::string(what) + " must hold non-negative integers");
    out.push_back(v.get<Digit>());
  }
  return out;
}

std::vector<std::size_t> read_indices(std::istream& in, std::size_t count, const std::string& what) {
  std::vector<std::size_t> out(count);
  for (auto& x : out) {
    long long v = -1;
    if (!(in >> v) || v < 0) throw Error(ErrorKind::Parse, "malformed " + what);
    x = static_cast<std::size_t>(v);
  }
  return out;
}

void expect_end(std::istream& in, const std::string& what) {
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::Parse, "trailing data in " + what + ": '" + extra + "'");
}

}  // namespace

std::vector<Digit> parse_digits(std::string_view text) {
  std::vector<Digit> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Digit d = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "bad digit '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    out.push_back(d);
    start = comma + 1;
  }
  return out;
}

RadixSystem radix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("period")) throw Error(ErrorKind::Parse, "radix system needs a \"period\"");
  std::vector<Digit> pre;
  if (j.contains("preperiod")) pre = json_digits(j.at("preperiod"), "preperiod");
  std::vector<Digit> per = json_digits(j.at("period"), "period");
  try {
    return RadixSystem(std::move(pre), std::move(per));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

nlohmann::json radix_to_json(const RadixSystem& sys) {
  return {{"preperiod", sys.preperiod()}, {"period", sys.period()}};
}

RadixSystem load_radix(const std::filesystem::path& path) { return radix_from_json(read_json(path)); }

ClopenSet clopen_from_json(const nlohmann::json& j, const RadixSystem& sys, std::size_t default_level) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "clopen set must be a JSON array");
  if (j.empty()) return ClopenSet::empty(sys, default_level);
  std::vector<ClopenInterval> intervals;
  std::size_t level = 0;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("lo") || !item.contains("hi") || !item.contains("level")) {
      throw Error(ErrorKind::Parse, "interval needs lo, hi and level");
    }
    const auto n = item.at("level").get<std::size_t>();
    LevelPoint lo(sys, json_digits(item.at("lo"), "lo"));
    LevelPoint hi(sys, json_digits(item.at("hi"), "hi"));
    if (lo.level() != n || hi.level() != n) throw Error(ErrorKind::Parse, "endpoint length differs from level");
    level = std::max(level, n);
    intervals.emplace_back(std::move(lo), std::move(hi));
  }
  // Mixed levels are allowed in the file; bring everything to the deepest one.
  ClopenSet out = ClopenSet::empty(sys, level);
  for (const auto& iv : intervals) out = set_union(out, ClopenSet::interval(iv.lo(), iv.hi()));
  return out;
}

nlohmann::json clopen_to_json(const ClopenSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iv : s.intervals()) {
    out.push_back({{"lo", std::vector<Digit>(iv.lo().digits().begin(), iv.lo().digits().end())},
                   {"hi", std::vector<Digit>(iv.hi().digits().begin(), iv.hi().digits().end())},
                   {"level", iv.level()}});
  }
  return out;
}

ClopenSet load_clopen(const std::filesystem::path& path, const RadixSystem& sys) {
  return clopen_from_json(read_json(path), sys);
}

FiniteGroup parse_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  const auto header = read_indices(in, 2, "group header");
  const std::size_t order = header[0];
  if (order == 0) throw Error(ErrorKind::Parse, "group order must be positive");
  const auto cells = read_indices(in, order * order, "Cayley table");
  expect_end(in, "group file");
  std::vector<Element> table(cells.begin(), cells.end());
  try {
    return FiniteGroup(order, std::move(table), static_cast<Element>(header[1]));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.identity() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    const auto row = g.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
  return out.str();
}

FiniteGroup load_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

GroupHom parse_hom(std::string_view text, const FiniteGroup& source, const FiniteGroup& target) {
  std::istringstream in{std::string(text)};
  const auto images = read_indices(in, source.order(), "homomorphism");
  expect_end(in, "homomorphism file");
  try {
    return GroupHom(source, target, std::vector<Element>(images.begin(), images.end()));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_hom(const GroupHom& f) {
  std::ostringstream out;
  for (std::size_t x = 0; x < f.map().size(); ++x) out << (x ? " " : "") << f.map()[x];
  out << '\n';
  return out.str();
}

TowerFiles load_tower_files(const std::filesystem::path& dir) {
  const nlohmann::json manifest = read_json(dir / "tower.json");
  if (!manifest.contains("levels") || !manifest.at("levels").is_array()) {
    throw Error(ErrorKind::Parse, "tower.json needs a \"levels\" array");
  }
  std::vector<FiniteGroup> levels;
  for (const auto& name : manifest.at("levels")) levels.push_back(load_group(dir / name.get<std::string>()));
  std::vector<GroupHom> steps;
  const auto step_names = manifest.value("steps", nlohmann::json::array());
  if (step_names.size() + 1 != levels.size()) {
    throw Error(ErrorKind::Parse, "tower.json lists " + std::to_string(levels.size()) + " levels and " +
                                      std::to_string(step_names.size()) + " steps");
  }
  for (std::size_t k = 0; k < step_names.size(); ++k) {
    steps.push_back(parse_hom(read_file(dir / step_names[k].get<std::string>()), levels[k + 1], levels[k]));
  }
  return {std::move(levels), std::move(steps)};
}

Tower load_tower(const std::filesystem::path& dir) {
  auto files = load_tower_files(dir);
  return Tower(std::move(files.levels), std::move(files.steps));
}

void save_tower(const Tower& t, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest{{"levels", nlohmann::json::array()}, {"steps", nlohmann::json::array()}};
  for (std::size_t k = 0; k < t.levels().size(); ++k) {
    const std::string name = "level" + std::to_string(k + 1) + ".grp";
    std::ofstream(dir / name) << format_group(t.levels()[k]);
    manifest["levels"].push_back(name);
  }
  for (std::size_t k = 0; k < t.steps().size(); ++k) {
    const std::string name = "step" + std::to_string(k + 1) + ".hom";
    std::ofstream(dir / name) << format_hom(t.steps()[k]);
    manifest["steps"].push_back(name);
  }
  std::ofstream(dir / "tower.json") << manifest.dump(2) << '\n';
}

}  // namespace cantor::io

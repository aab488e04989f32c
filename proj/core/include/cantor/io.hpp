#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cantor/clopen.hpp"
#include "cantor/group.hpp"

namespace cantor::io {

/// "1,2,0" → {1, 2, 0}; the empty string is the empty sequence.
std::vector<Digit> parse_digits(std::string_view text);

/// {"preperiod": [...], "period": [...]}
RadixSystem radix_from_json(const nlohmann::json& j);
nlohmann::json radix_to_json(const RadixSystem& sys);
RadixSystem load_radix(const std::filesystem::path& path);

/// [{"lo": [...], "hi": [...], "level": n}, ...]. An empty array is ∅ at
/// `default_level`.
ClopenSet clopen_from_json(const nlohmann::json& j, const RadixSystem& sys, std::size_t default_level = 0);
nlohmann::json clopen_to_json(const ClopenSet& s);
ClopenSet load_clopen(const std::filesystem::path& path, const RadixSystem& sys);

/// Group text format: "order identity" on the first line, then `order` rows of
/// the Cayley table.
FiniteGroup parse_group(std::string_view text);
std::string format_group(const FiniteGroup& g);
FiniteGroup load_group(const std::filesystem::path& path);

/// Homomorphism text format: one line of |source| target indices.
GroupHom parse_hom(std::string_view text, const FiniteGroup& source, const FiniteGroup& target);
std::string format_hom(const GroupHom& f);

/// Groups and maps of a tower directory, parsed but not yet checked.
struct TowerFiles {
  std::vector<FiniteGroup> levels;
  std::vector<GroupHom> steps;
};

TowerFiles load_tower_files(const std::filesystem::path& dir);

/// A directory holding tower.json ({"levels": [...], "steps": [...]}, file
/// names relative to the directory) plus the listed group and hom files.
Tower load_tower(const std::filesystem::path& dir);
void save_tower(const Tower& t, const std::filesystem::path& dir);

}  // namespace cantor::io

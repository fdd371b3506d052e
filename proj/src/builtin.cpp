#include "twistcert/builtin.hpp"

#include "twistcert/identities.hpp"

namespace twistcert {

namespace data {
extern const std::string_view kManifest;
extern const std::string_view kObstructions;
extern const std::string_view kN2, kN3, kN4, kN5, kN6;
}  // namespace data

std::vector<std::string_view> builtin_surfaces() { return {"N2", "N3", "N4", "N5", "N6"}; }

std::string_view builtin_presentation_text(std::string_view surface) {
  if (surface == "N2") return data::kN2;
  if (surface == "N3") return data::kN3;
  if (surface == "N4") return data::kN4;
  if (surface == "N5") return data::kN5;
  if (surface == "N6") return data::kN6;
  throw InputError("no H1 data shipped for surface " + std::string(surface));
}

const Presentation& builtin_presentation(std::string_view surface) {
  static const std::vector<Presentation> parsed = [] {
    std::vector<Presentation> out;
    for (auto s : builtin_surfaces()) out.push_back(parse_presentation(builtin_presentation_text(s)));
    return out;
  }();
  const auto surfaces = builtin_surfaces();
  for (std::size_t i = 0; i < surfaces.size(); ++i)
    if (surfaces[i] == surface) return parsed[i];
  throw InputError("no H1 data shipped for surface " + std::string(surface));
}

std::string_view builtin_obstructions_text() { return data::kObstructions; }

const std::vector<ObstructionEntry>& builtin_obstructions() {
  static const std::vector<ObstructionEntry> entries = parse_obstructions(data::kObstructions);
  return entries;
}

std::string_view builtin_manifest_text() { return data::kManifest; }

const std::vector<IdentityScript>& builtin_manifest() {
  static const std::vector<IdentityScript> manifest = parse_scripts(data::kManifest);
  return manifest;
}

}  // namespace twistcert

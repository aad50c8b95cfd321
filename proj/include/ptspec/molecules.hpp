#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptspec {

struct MoleculeParams {
  std::string name;
  double mu_amu = 0.0;
  double alpha_invA = 0.0;

  bool operator==(const MoleculeParams&) const = default;
};

/// Parses `name,mu_amu,alpha_invA` text with a header row. Blank lines are
/// skipped; empty input is an empty list. Throws Error(parse) with the line
/// number for malformed rows and Error(validation) for nonpositive values or
/// repeated names.
std::vector<MoleculeParams> parse_molecules(std::string_view text,
                                            std::string_view source = "<input>");

std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path);

std::string write_molecules(const std::vector<MoleculeParams>& molecules);

/// The twelve molecules shipped with the library.
const std::vector<MoleculeParams>& bundled_molecules();

std::optional<MoleculeParams> find_molecule(const std::vector<MoleculeParams>& molecules,
                                            std::string_view name);

}  // namespace ptspec

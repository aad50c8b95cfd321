#pragma once

#include <string>
#include <vector>

#include "ptspec/molecules.hpp"
#include "ptspec/schrodinger.hpp"

namespace ptspec {

/// Settings shared by the spectrum-style commands.
struct RunConfig {
  double A = -2.0;  // eV
  double B = 3.0;   // eV
  double hbar_c = kDefaultHbarC;
  double amu_to_ev = kDefaultAmuToEv;
  std::vector<int> n_values{0, 5, 7};
  std::vector<int> l_values{0, 5, 10};
};

/// A printed entry of the published energy table, kept as the original text.
struct PublishedEntry {
  const char* molecule;
  int n;
  int l;
  const char* value;  // eV
};

const std::vector<PublishedEntry>& published_energy_table();

/// Looks up the printed value; nullptr when the table has no such entry.
const PublishedEntry* find_published_entry(const std::string& molecule, int n, int l);

/// A candidate reading of the units and terms behind the published table.
struct EnergyConvention {
  double amu_to_ev = kDefaultAmuToEv;
  double hbar_c = kDefaultHbarC;
  bool keep_B = true;   // B enters the core square root
  bool keep_d0 = true;  // the l(l+1) d0 term is added

  std::string label() const;
};

double convention_energy(const MoleculeParams& molecule, double A, double B, int n, int l,
                         const EnergyConvention& convention);

struct CalibrationEntry {
  std::string molecule;
  int n = 0;
  int l = 0;
  double published = 0.0;
  double computed = 0.0;
  double rel_dev = 0.0;
};

struct CalibrationResult {
  EnergyConvention convention;
  double max_rel_dev = 0.0;
  double median_rel_dev = 0.0;
  std::vector<CalibrationEntry> entries;
};

/// Every candidate convention scored against all printed entries whose
/// molecule is in `molecules`, best (smallest max deviation) first.
std::vector<CalibrationResult> calibrate_published_table(const std::vector<MoleculeParams>& molecules,
                                                     double A, double B);

/// The 12 x (n, l) grid: closed-form energy under `config`, the best
/// calibrated convention, and the printed value side by side.
std::string table2_csv(const std::vector<MoleculeParams>& molecules, const RunConfig& config);

/// Markdown report of the convention scan with per-entry deviations of the best one.
std::string calibration_report(const std::vector<MoleculeParams>& molecules, double A, double B);

}  // namespace ptspec

#include "ptspec/table2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptspec/error.hpp"
#include "ptspec/format.hpp"

namespace ptspec {

const std::vector<PublishedEntry>& published_energy_table() {
  static const std::vector<PublishedEntry> table = {
      {"I2", 0, 0, "-2.01518700249"},
      {"I2", 0, 5, "-1.86617831309"},
      {"I2", 0, 10, "-1.72289229469"},
      {"I2", 5, 0, "-2.33037239432"},
      {"I2", 5, 5, "-2.16991836290"},
      {"I2", 5, 10, "-2.01518700249"},
      {"I2", 7, 0, "-2.46285594258"},
      {"I2", 7, 5, "-2.29782377436"},
      {"I2", 7, 10, "-2.13851427714"},
      {"CO", 0, 0, "-2.05756153769"},
      {"CO", 0, 5, "-1.52220413799"},
      {"CO", 0, 10, "-1.06736269276"},
      {"CO", 5, 0, "-3.36982420049"},
      {"CO", 5, 5, "-2.67343489186"},
      {"CO", 5, 10, "-2.05756153769"},
      {"CO", 7, 0, "-3.98490713462"},
      {"CO", 7, 5, "-3.22410506241"},
      {"CO", 7, 10, "-2.54381894467"},
      {"TiH", 0, 0, "-2.08801628475"},
      {"TiH", 0, 5, "-1.30060734002"},
      {"TiH", 0, 10, "-0.69870620092"},
      {"TiH", 5, 0, "-4.21935759111"},
      {"TiH", 5, 5, "-3.06093303512"},
      {"TiH", 5, 10, "-2.08801628475"},
      {"TiH", 7, 0, "-5.27966285596"},
      {"TiH", 7, 5, "-3.97283205546"},
      {"TiH", 7, 10, "-2.85150906060"},
      {"TiC", 0, 0, "-2.03207234893"},
      {"TiC", 0, 5, "-1.72400386632"},
      {"TiC", 0, 10, "-1.44124539707"},
      {"TiC", 5, 0, "-2.72413935420"},
      {"TiC", 5, 5, "-2.36545084489"},
      {"TiC", 5, 10, "-2.03207234893"},
      {"TiC", 7, 0, "-3.02931337126"},
      {"TiC", 7, 5, "-2.65037685127"},
      {"TiC", 7, 10, "-2.29675034463"},
      {"N2", 0, 0, "-2.06701616738"},
      {"N2", 0, 5, "-1.45117393674"},
      {"N2", 0, 10, "-0.94397059248"},
      {"N2", 5, 0, "-3.62461728776"},
      {"N2", 5, 5, "-2.79149728439"},
      {"N2", 5, 10, "-2.06701616738"},
      {"N2", 7, 0, "-4.36933328865"},
      {"N2", 7, 5, "-3.44930217618"},
      {"N2", 7, 10, "-2.63790995008"},
      {"NO", 0, 0, "-2.06620070795"},
      {"NO", 0, 5, "-1.45722010494"},
      {"NO", 0, 10, "-0.95429245499"},
      {"NO", 5, 0, "-3.60232077313"},
      {"NO", 5, 5, "-2.78123426402"},
      {"NO", 5, 10, "-2.06620070795"},
      {"NO", 7, 0, "-4.33554810662"},
      {"NO", 7, 5, "-3.42961923507"},
      {"NO", 7, 10, "-2.62974331656"},
      {"CrH", 0, 0, "-2.10140007384"},
      {"CrH", 0, 5, "-1.20972224650"},
      {"CrH", 0, 10, "-0.56269024132"},
      {"CrH", 5, 0, "-4.61869319503"},
      {"CrH", 5, 5, "-3.23772372335"},
      {"CrH", 5, 10, "-2.10140007384"},
      {"CrH", 7, 0, "-5.89961376433"},
      {"CrH", 7, 5, "-4.32292763492"},
      {"CrH", 7, 10, "-2.99088732768"},
      {"NiC", 0, 0, "-2.04665077681"},
      {"NiC", 0, 5, "-1.6067266228"},
      {"NiC", 0, 10, "-1.21996969697"},
      {"NiC", 5, 0, "-3.08600076935"},
      {"NiC", 5, 5, "-2.53974215899"},
      {"NiC", 5, 10, "-2.04665077681"},
      {"NiC", 7, 0, "-3.56128806192"},
      {"NiC", 7, 5, "-2.97249566902"},
      {"NiC", 7, 10, "-2.4368705043"},
      {"O2", 0, 0, "-2.06539452919"},
      {"O2", 0, 5, "-1.46321228291"},
      {"O2", 0, 10, "-0.96455612783"},
      {"O2", 5, 0, "-3.58033729534"},
      {"O2", 5, 5, "-2.77110286666"},
      {"O2", 5, 10, "-2.06539452919"},
      {"O2", 7, 0, "-4.30226362393"},
      {"O2", 7, 5, "-3.41020832231"},
      {"O2", 7, 10, "-2.62167911187"},
      {"LiH", 0, 0, "-2.07925256173"},
      {"LiH", 0, 5, "-1.36224649240"},
      {"LiH", 0, 10, "-0.79627951893"},
      {"LiH", 5, 0, "-3.96638198801"},
      {"LiH", 5, 5, "-2.94729772693"},
      {"LiH", 5, 10, "-2.07925256173"},
      {"LiH", 7, 0, "-4.89039754589"},
      {"LiH", 7, 5, "-3.75048200812"},
      {"LiH", 7, 10, "-2.76160556622"},
      {"VH", 0, 0, "-2.09612311332"},
      {"VH", 0, 5, "-1.24509129115"},
      {"VH", 0, 10, "-0.61445809096"},
      {"VH", 5, 0, "-4.45938262359"},
      {"VH", 5, 5, "-3.16755355746"},
      {"VH", 5, 10, "-2.09612311332"},
      {"VH", 7, 0, "-5.65153288432"},
      {"VH", 7, 5, "-4.18338492061"},
      {"VH", 7, 10, "-2.93563557888"},
      {"ScN", 0, 0, "-2.03002523536"},
      {"ScN", 0, 5, "-1.74087514222"},
      {"ScN", 0, 10, "-1.47392957006"},
      {"ScN", 5, 0, "-2.67493898459"},
      {"ScN", 5, 5, "-2.34137984949"},
      {"ScN", 5, 10, "-2.03002523536"},
      {"ScN", 7, 0, "-2.95777354778"},
      {"ScN", 7, 5, "-2.60645079589"},
      {"ScN", 7, 10, "-2.27733256498"},
  };
  return table;
}

const PublishedEntry* find_published_entry(const std::string& molecule, int n, int l) {
  for (const auto& e : published_energy_table()) {
    if (molecule == e.molecule && e.n == n && e.l == l) return &e;
  }
  return nullptr;
}

std::string EnergyConvention::label() const {
  return "amu=" + format_shortest(amu_to_ev) + " eV, hbar_c=" + format_shortest(hbar_c) +
         " eV*A, B term " + (keep_B ? "kept" : "dropped") + ", d0 term " +
         (keep_d0 ? "kept" : "dropped");
}

double convention_energy(const MoleculeParams& molecule, double A, double B, int n, int l,
                         const EnergyConvention& convention) {
  const NRContext ctx = NRContext::from_amu(molecule.mu_amu, convention.amu_to_ev,
                                            convention.hbar_c);
  PTPotential pot{A, convention.keep_B ? B : 0.0, molecule.alpha_invA};
  double E = energy_nr(pot, ctx, n, l, Branch::irregular).E;
  if (!convention.keep_d0) {
    const double prefactor =
        2.0 * pot.alpha * pot.alpha * ctx.hbar_c * ctx.hbar_c / ctx.mu;
    E -= prefactor * l * (l + 1.0) * ctx.d0;
  }
  return E;
}

namespace {

std::vector<EnergyConvention> candidate_conventions() {
  const double amus[] = {931.494061e6, 931.494028e6, 931.494e6, 931.49410242e6};
  const double hbar_cs[] = {1973.29, 1973.269804, 1973.0};
  std::vector<EnergyConvention> out;
  for (double amu : amus) {
    for (double hc : hbar_cs) {
      for (bool keep_B : {true, false}) {
        for (bool keep_d0 : {true, false}) out.push_back({amu, hc, keep_B, keep_d0});
      }
    }
  }
  return out;
}

double relative_deviation(double computed, double published) {
  return std::abs(computed - published) / std::abs(published);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<CalibrationResult> calibrate_published_table(const std::vector<MoleculeParams>& molecules,
                                                     double A, double B) {
  std::vector<CalibrationResult> results;
  for (const EnergyConvention& conv : candidate_conventions()) {
    CalibrationResult r{conv, 0.0, 0.0, {}};
    std::vector<double> devs;
    for (const auto& e : published_energy_table()) {
      const auto m = find_molecule(molecules, e.molecule);
      if (!m) continue;
      double published = 0.0;
      parse_double(e.value, published);
      const double computed = convention_energy(*m, A, B, e.n, e.l, conv);
      const double dev = relative_deviation(computed, published);
      r.entries.push_back({m->name, e.n, e.l, published, computed, dev});
      devs.push_back(dev);
      r.max_rel_dev = std::max(r.max_rel_dev, dev);
    }
    r.median_rel_dev = median(devs);
    results.push_back(std::move(r));
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const CalibrationResult& a, const CalibrationResult& b) {
                     if (a.max_rel_dev != b.max_rel_dev) return a.max_rel_dev < b.max_rel_dev;
                     return a.median_rel_dev < b.median_rel_dev;
                   });
  return results;
}

std::string table2_csv(const std::vector<MoleculeParams>& molecules, const RunConfig& config) {
  const auto calibration = calibrate_published_table(molecules, config.A, config.B);
  const bool have_calibration = !calibration.empty() && !calibration.front().entries.empty();
  CsvTable table({"molecule", "n", "l", "mu_amu", "alpha_invA", "E_closed_form_eV",
                  "E_calibrated_eV", "E_published_eV", "rel_dev_closed_form", "rel_dev_calibrated",
                  "zeta", "n_max", "beyond_nmax"});
  for (const auto& m : molecules) {
    const NRContext ctx = NRContext::from_amu(m.mu_amu, config.amu_to_ev, config.hbar_c);
    const PTPotential pot{config.A, config.B, m.alpha_invA};
    for (int n : config.n_values) {
      for (int l : config.l_values) {
        const EnergyLevel level = energy_nr(pot, ctx, n, l, Branch::irregular);
        const LevelCount count = level_count(pot, ctx, l);
        std::string calibrated;
        if (have_calibration) {
          calibrated = format_significant(
              convention_energy(m, config.A, config.B, n, l, calibration.front().convention));
        }
        std::string published_text;
        std::string dev_closed;
        std::string dev_calibrated;
        if (const PublishedEntry* e = find_published_entry(m.name, n, l)) {
          published_text = e->value;
          double published = 0.0;
          parse_double(published_text, published);
          dev_closed = format_significant(relative_deviation(level.E, published), 6);
          if (have_calibration) {
            dev_calibrated = format_significant(
                relative_deviation(convention_energy(m, config.A, config.B, n, l,
                                                     calibration.front().convention),
                                   published),
                6);
          }
        }
        table.add_row({m.name, std::to_string(n), std::to_string(l), format_shortest(m.mu_amu),
                       format_shortest(m.alpha_invA), format_significant(level.E), calibrated,
                       published_text, dev_closed, dev_calibrated, format_significant(count.zeta),
                       std::to_string(count.n_max), n >= count.n_max ? "1" : "0"});
      }
    }
  }
  return table.to_string();
}

std::string calibration_report(const std::vector<MoleculeParams>& molecules, double A, double B) {
  const auto results = calibrate_published_table(molecules, A, B);
  std::string out = "# Energy table calibration\n\n";
  out += "Printed energies compared with the closed-form spectrum at A = " + format_shortest(A) +
         " eV, B = " + format_shortest(B) +
         " eV under every candidate convention (mass unit, hbar*c, whether the B term and the "
         "l(l+1) d0 term are included). Ranked by the largest relative deviation.\n\n";
  if (results.empty() || results.front().entries.empty()) {
    out += "No printed entries match the supplied molecules.\n";
    return out;
  }
  out += "| rank | convention | max rel. dev. | median rel. dev. |\n";
  out += "|---:|---|---:|---:|\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out += "| " + std::to_string(i + 1) + " | " + r.convention.label() + " | " +
           format_significant(r.max_rel_dev, 4) + " | " +
           format_significant(r.median_rel_dev, 4) + " |\n";
  }
  const auto& best = results.front();
  out += "\n## Best convention\n\n" + best.convention.label() + "\n\n";
  out += "| molecule | n | l | printed (eV) | computed (eV) | rel. dev. |\n";
  out += "|---|---:|---:|---:|---:|---:|\n";
  for (const auto& e : best.entries) {
    const PublishedEntry* p = find_published_entry(e.molecule, e.n, e.l);
    out += "| " + e.molecule + " | " + std::to_string(e.n) + " | " + std::to_string(e.l) + " | " +
           (p ? p->value : "") + " | " + format_significant(e.computed) + " | " +
           format_significant(e.rel_dev, 4) + " |\n";
  }
  return out;
}

}  // namespace ptspec

#include "ptspec/molecules.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ptspec/error.hpp"
#include "ptspec/format.hpp"

namespace ptspec {
namespace {

constexpr std::string_view kHeader = "name,mu_amu,alpha_invA";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

constexpr std::string_view kBundled =
    "name,mu_amu,alpha_invA\n"
    "I2,63.452235020,1.86430\n"
    "CO,6.860586000,2.29940\n"
    "TiH,0.987371000,1.32408\n"
    "TiC,9.606079000,1.52550\n"
    "N2,7.003350000,2.69860\n"
    "NO,7.468441000,2.75340\n"
    "CrH,0.988976000,1.52179\n"
    "NiC,9.974265000,2.25297\n"
    "O2,7.997457504,2.81510\n"
    "LiH,0.880122100,1.12800\n"
    "VH,0.988005000,1.44370\n"
    "ScN,10.68277100,1.50680\n";

}  // namespace

std::vector<MoleculeParams> parse_molecules(std::string_view text, std::string_view source) {
  std::vector<MoleculeParams> out;
  std::set<std::string, std::less<>> names;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kHeader) {
        throw Error(ErrorKind::parse, where() + "expected header '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 3) {
      throw Error(ErrorKind::parse, where() + "expected 3 fields, found " +
                                        std::to_string(fields.size()));
    }
    MoleculeParams m;
    m.name = std::string(fields[0]);
    if (m.name.empty()) throw Error(ErrorKind::parse, where() + "empty molecule name");
    if (!parse_double(fields[1], m.mu_amu)) {
      throw Error(ErrorKind::parse, where() + "bad mu_amu '" + std::string(fields[1]) + "'");
    }
    if (!parse_double(fields[2], m.alpha_invA)) {
      throw Error(ErrorKind::parse, where() + "bad alpha_invA '" + std::string(fields[2]) + "'");
    }
    if (!(m.mu_amu > 0.0) || !(m.alpha_invA > 0.0)) {
      throw Error(ErrorKind::validation, where() + "mu_amu and alpha_invA must be positive");
    }
    if (!names.insert(m.name).second) {
      throw Error(ErrorKind::validation, where() + "duplicate molecule '" + m.name + "'");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_molecules(ss.str(), path.string());
}

std::string write_molecules(const std::vector<MoleculeParams>& molecules) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& m : molecules) {
    out += m.name + ',' + format_shortest(m.mu_amu) + ',' + format_shortest(m.alpha_invA) + '\n';
  }
  return out;
}

const std::vector<MoleculeParams>& bundled_molecules() {
  static const std::vector<MoleculeParams> molecules = parse_molecules(kBundled, "<bundled>");
  return molecules;
}

std::optional<MoleculeParams> find_molecule(const std::vector<MoleculeParams>& molecules,
                                            std::string_view name) {
  for (const auto& m : molecules) {
    if (m.name == name) return m;
  }
  return std::nullopt;
}

}  // namespace ptspec

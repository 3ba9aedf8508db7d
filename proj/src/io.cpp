#include "sktlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "sktlab/errors.hpp"

namespace sktlab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw InputError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string snapshot_text(const Grid& g, const StateField& s) {
  std::string out;
  out += "# t " + format_double(s.t) + "\n";
  out += "# grid " + std::to_string(g.dim) + " " + std::to_string(g.nx);
  if (g.dim == 2) out += " " + std::to_string(g.ny);
  out += "\n# h " + format_double(g.hx());
  if (g.dim == 2) out += " " + format_double(g.hy());
  out += "\n# species " + std::to_string(s.species()) + "\n";
  for (std::size_t c = 0; c < s.cells(); ++c) {
    for (int i = 0; i < s.species(); ++i) {
      if (i) out += ' ';
      out += format_double(s.u[static_cast<std::size_t>(i)][c]);
    }
    out += '\n';
  }
  return out;
}

namespace {

double parse_number(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw InputError("snapshot line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

StateField parse_snapshot(std::string_view text, const Grid& g) {
  StateField s;
  int species = -1;
  double t = 0.0;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "#") {
      if (tok.size() >= 3 && tok[1] == "t") t = parse_number(tok[2], line_no);
      if (tok.size() >= 3 && tok[1] == "species") species = static_cast<int>(parse_number(tok[2], line_no));
      if (tok.size() >= 4 && tok[1] == "grid") {
        const int dim = static_cast<int>(parse_number(tok[2], line_no));
        const int nx = static_cast<int>(parse_number(tok[3], line_no));
        const int ny = tok.size() >= 5 ? static_cast<int>(parse_number(tok[4], line_no)) : 1;
        if (dim != g.dim || nx != g.nx || (dim == 2 && ny != g.ny)) {
          throw InputError("snapshot line " + std::to_string(line_no) + ": grid shape does not match the config");
        }
      }
      continue;
    }
    std::vector<double> row;
    for (auto tk : tok) row.push_back(parse_number(tk, line_no));
    if (species < 0) species = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != species) {
      throw InputError("snapshot line " + std::to_string(line_no) + ": expected " + std::to_string(species) +
                       " values");
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.size() != g.cells()) {
    throw InputError("snapshot has " + std::to_string(rows.size()) + " cells, grid has " + std::to_string(g.cells()));
  }
  s = StateField(species, rows.size());
  s.t = t;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (int i = 0; i < species; ++i) s.u[static_cast<std::size_t>(i)][c] = rows[c][static_cast<std::size_t>(i)];
  }
  return s;
}

std::string monitors_csv(const MonitorBundle& b) {
  std::string out;
  for (std::size_t k = 0; k < 12; ++k) {
    if (k) out += ',';
    out += kMonitorColumns[k];
  }
  out += '\n';
  const std::size_t rows = b.rows();
  for (std::size_t r = 0; r < rows; ++r) {
    out += format_double(b.series.front().t[r]);
    for (const auto& s : b.series) {
      out += ',';
      out += format_double(s.value[r]);
    }
    out += '\n';
  }
  return out;
}

std::string steps_csv(const MonitorBundle& b) {
  std::string out = "t,dt,mass,mass_change,clamp_mass,solver_mass,clamps,entropy_residual";
  for (double p : b.lp_powers) out += ",lp_residual_p" + format_double(p);
  out += '\n';
  for (const auto& s : b.steps) {
    out += format_double(s.t) + ',' + format_double(s.dt) + ',' + format_double(s.mass) + ',' +
           format_double(s.mass_change) + ',' + format_double(s.clamp_mass) + ',' + format_double(s.solver_mass) +
           ',' + std::to_string(s.clamps) + ',' + format_double(s.entropy_residual);
    for (double r : s.lp_residuals) out += ',' + format_double(r);
    out += '\n';
  }
  return out;
}

}  // namespace sktlab

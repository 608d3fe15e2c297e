#include "splitflow/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "splitflow/errors.hpp"

namespace splitflow::io {

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

double parse_double(const std::string& cell, const std::string& path) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw Error("malformed numeric cell '" + cell + "' in " + path);
  }
}

}  // namespace

std::string full_precision(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_field_csv(const std::string& path, const TorusField& field) {
  const TorusField nodes = to_nodes(field);
  std::ofstream out = open_for_write(path);
  out << "q,x,re,im\n";
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    out << q << ',' << full_precision(nodes.grid().node(q)) << ','
        << full_precision(nodes[q].real()) << ','
        << full_precision(nodes[q].imag()) << '\n';
  }
}

TorusField read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line) || line != "q,x,re,im") {
    throw Error("field CSV '" + path + "': missing q,x,re,im header");
  }
  std::vector<cplx> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 4) {
      throw Error("field CSV '" + path + "': expected 4 columns");
    }
    values.emplace_back(parse_double(cells[2], path), parse_double(cells[3], path));
  }
  const TorusGrid grid(values.size());
  return TorusField(grid, FieldRepr::nodes, std::move(values));
}

void write_trajectory_csv(const std::string& path,
                          const std::vector<double>& times,
                          const std::vector<double>& norms) {
  if (times.size() != norms.size()) {
    throw Error("trajectory CSV: times and norms lengths differ");
  }
  std::ofstream out = open_for_write(path);
  out << "k,t,norm_l2\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    out << k << ',' << full_precision(times[k]) << ','
        << full_precision(norms[k]) << '\n';
  }
}

void write_report_csv(const std::string& path,
                      const oracle::ConvergenceReport& report) {
  std::ofstream out = open_for_write(path);
  out << "res,h,err_l2,err_linf\n";
  for (const auto& row : report.rows) {
    out << full_precision(row.res) << ',' << full_precision(row.h) << ','
        << full_precision(row.err_l2) << ',' << full_precision(row.err_linf)
        << '\n';
  }
  out << "# slope=" << full_precision(report.slope)
      << " r2=" << full_precision(report.r2) << '\n';
}

}  // namespace splitflow::io

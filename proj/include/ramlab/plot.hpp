/**
 * @file ramlab/plot.hpp
 * @brief CSV knots of a piecewise-linear function, for external plotting.
 */
#pragma once

#include "ramlab/plfun.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ramlab {

inline void write_plot_csv(const PLFun& f, std::ostream& os) {
  os << "x,value\n";
  for (const auto& [x, y] : pl_plot_points(f)) os << to_string(x) << ',' << to_string(y) << '\n';
}

inline void emit_plot_csv(const PLFun& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_plot_csv(f, os);
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace ramlab

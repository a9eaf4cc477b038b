#pragma once

#include <string>
#include <vector>

namespace qsr::cli {

/// One CLI invocation producing the data behind (part of) a figure.
struct FigureRun {
  int figure;
  std::string content;
  std::vector<std::string> args;  // without the program name
};

/// Invocations regenerating figures 1-16, in figure order.
const std::vector<FigureRun>& figure_runs();

}  // namespace qsr::cli

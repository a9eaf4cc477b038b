#include "figures.hpp"

namespace qsr::cli {
namespace {

const char* const kTheta = "0:pi:181";

std::vector<std::string> density(const char* particle, const char* s, const char* betas) {
  return {"scan", "--quantity", "p", "--particle", particle, "--s", s, "--beta", betas,
          "--theta", kTheta};
}

std::vector<std::string> local(const char* particle, const char* s, const char* betas) {
  return {"scan", "--quantity", "q_local", "--particle", particle, "--s", s, "--beta", betas,
          "--theta", kTheta};
}

std::vector<std::string> maxima(const char* s) {
  return {"maxima", "--particle", "electron", "--s", s, "--beta", "0.5:0.999:100"};
}

std::vector<std::string> width(const char* particle, const char* s) {
  return {"scan", "--quantity", "eff_angle", "--particle", particle, "--s", s,
          "--beta", "0:0.99:34"};
}

std::vector<FigureRun> build() {
  std::vector<FigureRun> runs = {
      {1, "q_s^b(beta), s = 1, 2", {"polarization", "--particle", "boson", "--beta", "0:1:101"}},
      {1, "q_s^e(beta), s = 1, 2", {"polarization", "--particle", "electron", "--beta", "0:1:101"}},
      {2, "p_2^b(beta; theta)", density("boson", "2", "0,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1")},
      {3, "p_2^e(beta; theta)", density("electron", "2", "0,0.3,0.5,0.6,0.8,0.9,0.99999,1")},
      {4, "p_3^b(beta; theta)", density("boson", "3", "0,0.6,0.8,0.9,1")},
      {5, "p_3^e(beta; theta)", density("electron", "3", "0,0.4,0.7,sqrt(3)/2,0.96,0.99,0.999,1")},
      {6, "p_1^b(beta; theta)", density("boson", "1", "0,0.7,0.9,1")},
      {7, "p_1^e(beta; theta)",
       density("electron", "1", "0,0.1,0.6,1/sqrt(2),0.8,0.9,0.96,0.99,0.999")},
      {8, "p_0^b(beta; theta)", density("boson", "0", "0,0.7,0.9,1")},
      {9, "p_0^e(beta; theta)", density("electron", "0", "0,0.4,0.6,1/sqrt(2),0.8,0.9,0.96,0.99,1")},
  };
  for (const char* s : {"0", "1", "3"}) {
    runs.push_back({10, std::string("theta_max for s = ") + s, maxima(s)});
  }
  for (const char* s : {"0", "1", "2", "3"}) {
    runs.push_back({11, std::string("p_max for s = ") + s, maxima(s)});
  }
  for (const char* particle : {"boson", "electron"}) {
    for (const char* s : {"0", "1", "2", "3"}) {
      runs.push_back({12, std::string("Delta_") + s + " " + particle, width(particle, s)});
    }
  }
  runs.push_back({13, "q_1^b(beta; theta)", local("boson", "1", "0,0.7,0.9,1")});
  runs.push_back({14, "q_1^e(beta; theta)", local("electron", "1", "0,0.8,0.95,0.99,0.999,0.999999")});
  runs.push_back({15, "q_2^b(beta; theta)", local("boson", "2", "0,0.7,0.9,1")});
  runs.push_back(
      {16, "q_2^e(beta; theta)", local("electron", "2", "0,0.8,0.95,0.99,0.999,0.9999,0.999999")});
  return runs;
}

}  // namespace

const std::vector<FigureRun>& figure_runs() {
  static const std::vector<FigureRun> runs = build();
  return runs;
}

}  // namespace qsr::cli

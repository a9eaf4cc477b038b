#include "qsr/types.hpp"

#include <string>

#include "qsr/errors.hpp"

namespace qsr {

std::string_view to_string(Particle p) noexcept {
  return p == Particle::boson ? "boson" : "electron";
}

std::string_view to_string(Polarization s) noexcept {
  switch (s) {
    case Polarization::total: return "total";
    case Polarization::right: return "right";
    case Polarization::left: return "left";
    case Polarization::sigma: return "sigma";
    case Polarization::pi: return "pi";
  }
  return "?";
}

Particle parse_particle(std::string_view text) {
  if (text == "boson") return Particle::boson;
  if (text == "electron") return Particle::electron;
  throw DomainError("unknown particle '" + std::string(text) + "'");
}

Polarization polarization_from_label(int s) {
  switch (s) {
    case 0: return Polarization::total;
    case 1: return Polarization::right;
    case -1: return Polarization::left;
    case 2: return Polarization::sigma;
    case 3: return Polarization::pi;
    default: throw DomainError("polarization label must be one of 0, 1, -1, 2, 3");
  }
}

Spin spin_from_sign(int zeta) {
  if (zeta == 1) return Spin::up;
  if (zeta == -1) return Spin::down;
  throw DomainError("spin must be +1 or -1");
}

}  // namespace qsr

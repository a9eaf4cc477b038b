#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qsr {

enum class Particle { boson, electron };

/// Transverse spin of the electron's initial state: +1 along the field,
/// -1 against it. The final (ground) state is always -1.
enum class Spin : int { up = +1, down = -1 };

/// Polarization components. right/left are the circular components g = +1/-1,
/// sigma/pi the linear ones, total their sum.
enum class Polarization : int { total = 0, right = 1, left = -1, sigma = 2, pi = 3 };

inline constexpr int sign(Spin z) noexcept { return static_cast<int>(z); }
inline constexpr int label(Polarization s) noexcept { return static_cast<int>(s); }
inline constexpr Spin flipped(Spin z) noexcept { return z == Spin::up ? Spin::down : Spin::up; }

inline constexpr bool is_circular(Polarization s) noexcept {
  return s == Polarization::right || s == Polarization::left;
}

/// g -> -g for circular components, identity otherwise.
inline constexpr Polarization mirrored(Polarization s) noexcept {
  switch (s) {
    case Polarization::right: return Polarization::left;
    case Polarization::left: return Polarization::right;
    default: return s;
  }
}

/// Particle kind plus, for electrons, the transverse spin.
class ParticleSpec {
public:
  static ParticleSpec boson() { return ParticleSpec(Particle::boson, std::nullopt); }
  static ParticleSpec electron(Spin zeta) { return ParticleSpec(Particle::electron, zeta); }

  Particle kind() const noexcept { return kind_; }
  std::optional<Spin> zeta() const noexcept { return zeta_; }
  bool is_electron() const noexcept { return kind_ == Particle::electron; }

private:
  ParticleSpec(Particle kind, std::optional<Spin> zeta) : kind_(kind), zeta_(zeta) {}

  Particle kind_;
  std::optional<Spin> zeta_;
};

std::string_view to_string(Particle p) noexcept;
std::string_view to_string(Polarization s) noexcept;

/// Accepts "boson"/"electron". Throws DomainError otherwise.
Particle parse_particle(std::string_view text);
/// Accepts the integer labels 0, 1, -1, 2, 3. Throws DomainError otherwise.
Polarization polarization_from_label(int s);
/// Accepts +1 / -1. Throws DomainError otherwise.
Spin spin_from_sign(int zeta);

}  // namespace qsr

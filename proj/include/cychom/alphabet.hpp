#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cychom {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Letter variants. Chord letters generate the algebra A; Hat and Base
// letters generate the module extension; DualHat and DualBase are the
// graded duals.
enum class Variant : std::uint8_t { Chord, Hat, Base, DualHat, DualBase };

inline bool is_chord(Variant v) { return v == Variant::Chord; }
inline bool is_module(Variant v) { return v == Variant::Hat || v == Variant::Base; }
inline bool is_dual(Variant v) { return v == Variant::DualHat || v == Variant::DualBase; }
// letters that may carry the excitation mark
inline bool is_excitable(Variant v) { return v != Variant::Chord; }

// One letter of a word. `base` is the chord id for chord-family variants
// and the component index (1..m) for basepoint-family variants.
struct Letter {
  std::int32_t base = 0;
  Variant variant = Variant::Chord;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline bool basepoint_family(Variant v) {
  return v == Variant::Base || v == Variant::DualBase;
}

// Sort key: declaration order of the underlying generator name first
// (chords in declaration order, then basepoints by component), variant second.
inline int variant_rank(Variant v) {
  switch (v) {
    case Variant::Chord: return 0;
    case Variant::Hat: return 1;
    case Variant::DualHat: return 2;
    case Variant::Base: return 0;
    case Variant::DualBase: return 1;
  }
  return 0;
}

inline bool letter_less(const Letter& a, const Letter& b) {
  int fa = basepoint_family(a.variant) ? 1 : 0;
  int fb = basepoint_family(b.variant) ? 1 : 0;
  if (fa != fb) return fa < fb;
  if (a.base != b.base) return a.base < b.base;
  return variant_rank(a.variant) < variant_rank(b.variant);
}

struct ChordData {
  std::string name;
  int degree = 0;
  int from_component = 1; // start of the chord
  int to_component = 1;   // end of the chord
};

// The generator alphabet: m components, grading parameter n, declared chords.
struct Alphabet {
  int n = 2;
  int m = 1;
  std::vector<ChordData> chords;

  const ChordData& chord(int id) const {
    if (id < 0 || id >= static_cast<int>(chords.size()))
      throw error("unknown chord id " + std::to_string(id));
    return chords[static_cast<std::size_t>(id)];
  }

  int find_chord(const std::string& name) const {
    for (std::size_t i = 0; i < chords.size(); ++i)
      if (chords[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int degree(const Letter& u) const {
    switch (u.variant) {
      case Variant::Chord: return chord(u.base).degree;
      case Variant::Hat: return chord(u.base).degree + 1;
      case Variant::Base: return 0;
      case Variant::DualHat: return n - 3 - (chord(u.base).degree + 1);
      case Variant::DualBase: return n - 3;
    }
    return 0;
  }

  // Component indices for composability: a word u v is composable exactly
  // when right(u) == left(v). Chords act like matrix units E_{to,from};
  // duals reverse the pair.
  int left(const Letter& u) const {
    switch (u.variant) {
      case Variant::Chord:
      case Variant::Hat: return chord(u.base).to_component;
      case Variant::DualHat: return chord(u.base).from_component;
      default: return u.base; // basepoint family: component index
    }
  }
  int right(const Letter& u) const {
    switch (u.variant) {
      case Variant::Chord:
      case Variant::Hat: return chord(u.base).from_component;
      case Variant::DualHat: return chord(u.base).to_component;
      default: return u.base;
    }
  }

  std::string letter_name(const Letter& u) const {
    switch (u.variant) {
      case Variant::Chord: return chord(u.base).name;
      case Variant::Hat: return "^" + chord(u.base).name;
      case Variant::Base: return "x" + std::to_string(u.base);
      case Variant::DualHat: return "^" + chord(u.base).name + "*";
      case Variant::DualBase: return "x" + std::to_string(u.base) + "*";
    }
    return "?";
  }

  Letter chord_letter(int id) const { return Letter{id, Variant::Chord}; }
  Letter hat_letter(int id) const { return Letter{id, Variant::Hat}; }
  Letter dual_hat_letter(int id) const { return Letter{id, Variant::DualHat}; }
  Letter base_letter(int j) const {
    if (j < 1 || j > m) throw error("component index out of range");
    return Letter{j, Variant::Base};
  }
  Letter dual_base_letter(int j) const {
    if (j < 1 || j > m) throw error("component index out of range");
    return Letter{j, Variant::DualBase};
  }
};

// dual pairing: u contracts with v iff u is the dual of v
inline bool dual_matches(const Letter& u, const Letter& v) {
  return (u.variant == Variant::DualHat && v.variant == Variant::Hat &&
          u.base == v.base) ||
         (u.variant == Variant::DualBase && v.variant == Variant::Base &&
          u.base == v.base);
}

} // namespace cychom

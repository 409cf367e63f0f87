#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bog/circle.hpp"
#include "bog/rep.hpp"

namespace bog {

enum class ContinuousClass { None, LebesgueAC, SingularAtomless, GenericAtomless };
const char* to_string(ContinuousClass c);

enum class AtomSupport {
  /// Exactly the listed points.
  Finite,
  /// Every element of a finite subgroup.
  SubgroupHaar,
  /// Some points of the subgroup, not tracked individually.
  AtomsOnSubgroup,
};
const char* to_string(AtomSupport s);

/// A measure class on the circle: its atomic support and the class of its
/// continuous part.
struct MeasureClass {
  AtomSupport support = AtomSupport::Finite;
  /// Sorted and duplicate-free; used when support is Finite.
  std::vector<CirclePoint> atoms;
  /// Used when support is not Finite.
  CircleSubgroup subgroup;
  ContinuousClass continuous = ContinuousClass::None;
  /// The singular part comes from SingularClosed summands only, whose
  /// convolution powers stay singular.
  bool singular_closed = false;
  bool truncated = false;

  static MeasureClass delta(const CirclePoint& p);
  static MeasureClass points(std::vector<CirclePoint> ps);
  static MeasureClass continuous_only(ContinuousClass c, bool singular_closed = false);

  bool has_atoms() const { return support != AtomSupport::Finite || !atoms.empty(); }
  bool is_zero() const { return !has_atoms() && continuous == ContinuousClass::None; }

  friend bool operator==(const MeasureClass&, const MeasureClass&) = default;

  std::string to_string() const;
};

/// Class of a sum of measures.
MeasureClass join(const MeasureClass& a, const MeasureClass& b);
MeasureClass convolve(const MeasureClass& a, const MeasureClass& b);

struct Closure {
  MeasureClass measure;
  std::size_t iterations = 0;
  /// The atom part was settled from the generated subgroup, not by iterating.
  bool subgroup_shortcut = false;
};

/// Class of Σ_{n≥0} m^{*n}.
Closure convolution_closure(const MeasureClass& m);

/// Atoms at every eigenvalue and its conjugate, continuous part from the wm
/// archetypes.
MeasureClass spectral_class(const Representation& rep);

struct BimoduleInvariant {
  /// Class of [Σ μ^{*n} * δ_s] for Lebesgue-generic s, up to the translation.
  MeasureClass fiber;
  std::size_t iterations = 0;
  /// True means multiplicity ∞ almost everywhere; false means not asserted.
  bool multiplicity_infinite = false;
};

BimoduleInvariant bimodule_type(const Representation& rep);

enum class FiberCoarse { Atomic, Lebesgue, Singular, Undetermined };
const char* to_string(FiberCoarse c);
FiberCoarse coarse_class(const MeasureClass& fiber);

struct Separation {
  std::string description;
  FiberCoarse first;
  FiberCoarse second;
};

/// Fires only when both representations have at least two atoms counted with
/// multiplicity and the coarse fiber classes differ.
std::optional<Separation> separating_invariant(const Representation& r1,
                                               const Representation& r2);

}  // namespace bog

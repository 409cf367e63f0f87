#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bog/circle.hpp"
#include "bog/numbers.hpp"

namespace bog {

enum class WmKind { LeftRegular, SingularClosed, AtomlessGeneric };

const char* to_string(WmKind kind);

/// A weakly mixing summand, described only by its archetype and flags.
struct WmPart {
  WmKind kind = WmKind::AtomlessGeneric;
  Count multiplicity{1};
  bool mixing = false;
  bool mildly_mixing = false;
  bool rigid = false;

  friend bool operator==(const WmPart&, const WmPart&) = default;
  friend auto operator<=>(const WmPart&, const WmPart&) = default;
};

/// Applies the forced flags and rejects contradictory ones (ConflictingFlags,
/// InvalidMultiplicity).
WmPart make_wm_part(WmKind kind, Count multiplicity, bool mixing, bool mildly_mixing,
                    bool rigid);

/// One eigenvalue pair. The stored eigenvalue is the pair representative.
struct Atom {
  CirclePoint eigenvalue;
  Count multiplicity{1};

  friend bool operator==(const Atom&, const Atom&) = default;
};

class Representation {
 public:
  Representation() = default;
  /// Folds conjugate pairs, merges duplicates and sorts. Throws
  /// InvalidMultiplicity on zero multiplicities.
  Representation(std::string name, std::vector<Atom> atoms, std::vector<WmPart> wm);

  const std::string& name() const { return name_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<WmPart>& wm_parts() const { return wm_; }

  bool is_almost_periodic() const { return wm_.empty(); }
  bool is_empty() const { return atoms_.empty() && wm_.empty(); }
  std::vector<CirclePoint> eigenvalues() const;
  SymbolTable symbols() const;

  Representation renamed(std::string name) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.atoms_ == b.atoms_ && a.wm_ == b.wm_;
  }

 private:
  std::string name_;
  std::vector<Atom> atoms_;
  std::vector<WmPart> wm_;
};

/// Contribution of one eigenvalue pair: 1 for real eigenvalues, else 2.
Count atom_dimension(const Atom& atom);

Count dimension(const Representation& rep);
Count ap_dimension(const Representation& rep);
Count kernel_index(const Representation& rep);
bool is_faithful(const Representation& rep);
CircleSubgroup eigenvalue_subgroup(const Representation& rep);
std::pair<Representation, Representation> decompose(const Representation& rep);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct RigidSubspaceTest {
  Tri answer = Tri::Unknown;
  std::string witness;
};

RigidSubspaceTest has_rigid_2dim(const Representation& rep);

/// Renders back to the spec-file grammar.
std::string render(const Representation& rep);

}  // namespace bog

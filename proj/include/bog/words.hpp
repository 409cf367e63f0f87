#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bog/circle.hpp"
#include "bog/rep.hpp"

namespace bog {

struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  /// Reduces the given letters.
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(std::uint32_t i, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word power(long k) const;
  Word operator*(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// `x3 x1^-1`; the empty word renders as `1`.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction; idempotent.
Word reduce(const std::vector<Letter>& letters);

/// Replaces every generator i by images[i].
Word substitute(const Word& w, const std::vector<Word>& images);

/// Generators with circle weights; the weight of a word is the signed sum.
struct WeightedBasis {
  std::vector<std::string> names;
  std::vector<CirclePoint> weights;

  std::size_t size() const { return names.size(); }
  CirclePoint weight(const Word& w) const;
  std::vector<std::string> weight_literals() const;
};

/// forward[i] is the i-th new generator as a word in the old ones; backward[j]
/// is the j-th old generator as a word in the new ones.
struct Automorphism {
  std::vector<Word> forward;
  std::vector<Word> backward;

  static Automorphism identity(std::size_t n);
  std::size_t size() const { return forward.size(); }
  /// Both compositions reduce to the identity substitution.
  bool verify() const;
  Automorphism inverse() const { return {backward, forward}; }
};

/// First `a`, then `b` (b's words are read in a's new generators).
Automorphism compose(const Automorphism& a, const Automorphism& b);

/// The substitution s ↦ s·tails[s] for s in the key set, identity elsewhere.
/// Throws TailUsesSubstitutedLetter.
Automorphism substitute_tails(const WeightedBasis& basis,
                                const std::map<std::size_t, Word>& tails);

/// Weights induced by an automorphism from the source weights.
WeightedBasis apply_weights(const WeightedBasis& source, const Automorphism& a,
                            std::vector<std::string> names);

/// Generators x_i (non-real eigenvalues, one per pair and copy), y_i
/// (trivial partners), z_i (half turns), w_i (trivial eigenvalue), with
/// infinite multiplicities truncated to `truncate` copies.
WeightedBasis standard_basis(const Representation& rep, std::size_t truncate);

struct RebaseMove {
  std::string label;
  std::map<std::size_t, Word> tails;
};

struct RebaseResult {
  Automorphism automorphism;
  /// Generators r_i (non-real target weights in target order), s_i (trivial),
  /// t_i (half turns).
  WeightedBasis basis;
  std::vector<RebaseMove> moves;
  bool swapped = false;
};

/// Nielsen-move construction of a new basis whose weights are exactly the
/// target multiset. Throws SubgroupMismatch, SizeMismatch, ExpressFailure.
RebaseResult rebase(const WeightedBasis& source,
                    const std::vector<CirclePoint>& target_weights);

/// Re-checks a rebase result against the source and target.
bool verify_rebase(const WeightedBasis& source, const std::vector<CirclePoint>& target,
                   const RebaseResult& result);

struct SchreierEdge {
  std::size_t vertex;
  std::size_t generator;
  std::size_t target;
};

/// Coset graph of the kernel of F_n -> S¹: vertices are the image elements
/// k/T, a BFS spanning tree, and the remaining edges, each of which yields one
/// free generator of the kernel.
struct SchreierWitness {
  std::size_t order = 1;
  std::size_t generators = 0;
  std::uint64_t rank = 0;
  std::vector<CirclePoint> vertices;
  std::vector<SchreierEdge> tree_edges;
  std::vector<SchreierEdge> non_tree_edges;

  /// Tree edge entering each vertex other than the root.
  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_generator;

  Word tree_path(std::size_t vertex) const;
  /// p(v) g p(v·g)^-1 for a non-tree edge.
  Word kernel_generator(const SchreierEdge& e) const;
};

/// Throws InfiniteImage when the weights generate an infinite subgroup.
SchreierWitness schreier_rank(const std::vector<CirclePoint>& weights);

}  // namespace bog

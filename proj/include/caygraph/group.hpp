#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace caygraph {

/// The marked-group families handled by this library.
///
/// GammaSec2 / DeltaSec2 are the Z/3Z x Z and Z/3Z >| Z pairs with generators
/// {(1,0),(2,0),(0,+-1)}.  GammaK / DeltaK are the same underlying groups for
/// general k with the larger generating sets ((i,0) for i != 0, (i,1) for
/// i != 0,1, plus inverses).  GammaPrimeK is (Z, {+-2,...,+-(2k-3)}) and
/// DeltaPrimeK the infinite dihedral group with the alternating words of
/// length 2..2k-3.  ZxZ / ZsemiZ are the torsion-free pair with generators
/// (+-2,0),(+-3,0),(0,+-1).  CyclicZ and PlainZ are (Z/mZ,{+-1}) and (Z,{+-1}),
/// used as free-product factors and as the plain line.
enum class Family {
  GammaSec2,
  DeltaSec2,
  GammaK,
  DeltaK,
  GammaPrimeK,
  DeltaPrimeK,
  ZxZ,
  ZsemiZ,
  FreeProduct,
  CyclicZ,
  PlainZ,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct MarkedGroupSpec;

/// Group elements in normal form, one representation per family.
///
/// Fiber(i,n): i is a residue mod k, n an integer level.  Line(pos): an
/// integer (reduced mod m for CyclicZ).  Dihedral(t,eps): the infinite
/// dihedral normal form (ab)^t a^eps; the derived line coordinate is
/// iota = 2t + eps.  Pair(a,b): element of Z x Z or Z >| Z.  AltWord: a
/// strictly alternating word of non-identity factor elements of a free
/// product, stored as (side, factor element) letters.
struct GroupElement {
  struct Fiber {
    std::int64_t i = 0;
    std::int64_t n = 0;
    friend bool operator==(const Fiber&, const Fiber&) = default;
  };
  struct Line {
    std::int64_t pos = 0;
    friend bool operator==(const Line&, const Line&) = default;
  };
  struct Dihedral {
    std::int64_t t = 0;
    std::int8_t eps = 0;  // in {0,1}
    friend bool operator==(const Dihedral&, const Dihedral&) = default;
  };
  struct Pair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  struct Letter {
    std::int8_t side = 0;  // 0 = left factor, 1 = right factor
    std::shared_ptr<GroupElement> elem;
    bool operator==(const Letter& o) const;
  };
  struct AltWord {
    std::vector<Letter> letters;
    bool operator==(const AltWord& o) const { return letters == o.letters; }
  };

  std::variant<Fiber, Line, Dihedral, Pair, AltWord> rep;

  GroupElement() : rep(Line{0}) {}
  explicit GroupElement(Fiber f) : rep(f) {}
  explicit GroupElement(Line l) : rep(l) {}
  explicit GroupElement(Dihedral d) : rep(d) {}
  explicit GroupElement(Pair p) : rep(p) {}
  explicit GroupElement(AltWord w) : rep(std::move(w)) {}

  static GroupElement fiber(std::int64_t i, std::int64_t n) { return GroupElement(Fiber{i, n}); }
  static GroupElement line(std::int64_t pos) { return GroupElement(Line{pos}); }
  static GroupElement dihedral(std::int64_t t, int eps) {
    return GroupElement(Dihedral{t, static_cast<std::int8_t>(eps)});
  }
  static GroupElement pair(std::int64_t a, std::int64_t b) { return GroupElement(Pair{a, b}); }

  bool operator==(const GroupElement& o) const { return rep == o.rep; }

  bool is_fiber() const { return std::holds_alternative<Fiber>(rep); }
  bool is_line() const { return std::holds_alternative<Line>(rep); }
  bool is_dihedral() const { return std::holds_alternative<Dihedral>(rep); }
  bool is_pair() const { return std::holds_alternative<Pair>(rep); }
  bool is_alt_word() const { return std::holds_alternative<AltWord>(rep); }

  const Fiber& as_fiber() const { return std::get<Fiber>(rep); }
  const Line& as_line() const { return std::get<Line>(rep); }
  const Dihedral& as_dihedral() const { return std::get<Dihedral>(rep); }
  const Pair& as_pair() const { return std::get<Pair>(rep); }
  const AltWord& as_alt_word() const { return std::get<AltWord>(rep); }

  /// Canonical printable label, also used as the sampler's hash key.
  std::string label() const;
};

/// A marked group: family + parameter + its fixed symmetric generator list.
struct MarkedGroupSpec {
  Family family = Family::PlainZ;
  int k = 3;        // family parameter, >= 3 where applicable
  int modulus = 0;  // CyclicZ only
  std::shared_ptr<MarkedGroupSpec> left;   // FreeProduct only
  std::shared_ptr<MarkedGroupSpec> right;  // FreeProduct only

  static MarkedGroupSpec make(Family f, int k = 3);
  static MarkedGroupSpec cyclic(int modulus);
  static MarkedGroupSpec plain_z();
  static MarkedGroupSpec free_product(MarkedGroupSpec left, MarkedGroupSpec right);

  bool is_fiber_family() const;
  bool is_line_family() const;  // GammaPrimeK, DeltaPrimeK, CyclicZ, PlainZ
  bool is_pair_family() const { return family == Family::ZxZ || family == Family::ZsemiZ; }

  /// Size of the fiber (k) for fiber families.
  int fiber_size() const;

  bool operator==(const MarkedGroupSpec& o) const;
  std::string name() const;
};

/// Throws std::invalid_argument when the family/parameter combination is
/// outside the registry (e.g. k < 3 for the parametric families).
void validate_spec(const MarkedGroupSpec& spec);

GroupElement identity(const MarkedGroupSpec& spec);
bool is_identity(const GroupElement& g);

/// Normal-form product.  Throws std::domain_error on a family mismatch.
GroupElement mul(const GroupElement& g, const GroupElement& h, const MarkedGroupSpec& spec);
GroupElement inverse(const GroupElement& g, const MarkedGroupSpec& spec);

/// The fixed symmetric generator list of the marked group.
std::vector<GroupElement> generator_set(const MarkedGroupSpec& spec);

/// Bijection Z/2Z * Z/2Z -> Z realizing the line structure: +(word length)
/// when the word ends with the letter a, -(word length) when it ends with b
/// (iota = 2t+1 for (ab)^t a, -2t for (ab)^t).  Left multiplication by a or b
/// moves iota by +-1, and left multiplication by an alternating word of
/// length l moves it by exactly +-l.
std::int64_t dihedral_line_coordinate(const GroupElement& g);

/// Inverse of dihedral_line_coordinate.
GroupElement dihedral_from_line(std::int64_t iota);

/// Word length of an element in the marked group's word metric; for AltWord
/// this is the sum of the factor word lengths.
std::int64_t word_length(const GroupElement& g, const MarkedGroupSpec& spec);

/// True when the generator list is symmetric and identity-free and matches
/// the family's mandated shape.  Used by tests and validate_spec.
bool generators_valid(const MarkedGroupSpec& spec);

std::uint64_t hash_element(const GroupElement& g);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const {
    return static_cast<std::size_t>(hash_element(g));
  }
};

}  // namespace caygraph

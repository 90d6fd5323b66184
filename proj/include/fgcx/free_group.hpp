#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgcx {

/// Ordered generator names of a free group; the rank is the number of names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  /// a1, a2, ..., a<rank>
  static Alphabet standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::string& name(std::size_t gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or rank() when absent.
  std::size_t find(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A generator or its inverse. Letters are totally ordered by
/// (generator index, sign) with the positive letter first, which is also the
/// order of `index()`.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t gen, int sign)
      : code_(2 * gen + (sign < 0 ? 1U : 0U)) {}

  static constexpr Letter from_index(std::uint32_t index) {
    Letter l;
    l.code_ = index;
    return l;
  }

  constexpr std::uint32_t gen() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1U) ? -1 : 1; }
  constexpr bool positive() const { return (code_ & 1U) == 0; }

  /// Position among the 2n letters: 2*gen for x, 2*gen+1 for x^-1.
  constexpr std::uint32_t index() const { return code_; }

  constexpr Letter inverse() const { return from_index(code_ ^ 1U); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// Freely reduced word. Every constructor performs free reduction.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  /// Largest generator index used plus one (0 for the empty word).
  std::size_t min_rank() const;

  friend Word operator*(const Word& u, const Word& v);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> letters);

/// Cyclically reduced word, stored as its lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// The canonical representative as an ordinary word.
  Word word() const { return Word(letters_); }

  auto operator<=>(const CyclicWord&) const = default;
  bool operator==(const CyclicWord&) const = default;

 private:
  friend CyclicWord make_cyclic(std::span<const Letter> cyclically_reduced);
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;
};

/// Peels the conjugation off `w` and canonicalizes the rotation.
/// free_reduce(conjugator * c.word() * conjugator^-1) == w, where the
/// conjugator absorbs the rotation needed to reach the canonical form.
CyclicReduction cyclic_reduce(const Word& w);

/// Length of the cyclic reduction without building it.
std::size_t cyclic_length(std::span<const Letter> reduced);

/// Canonical rotation of an already cyclically reduced letter sequence.
CyclicWord make_cyclic(std::span<const Letter> cyclically_reduced);

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string serialize(std::span<const Letter> letters, const Alphabet& alphabet);
inline std::string serialize(const Word& w, const Alphabet& alphabet) {
  return serialize(w.letters(), alphabet);
}
inline std::string serialize(const CyclicWord& c, const Alphabet& alphabet) {
  return serialize(c.letters(), alphabet);
}

using AbelianVector = std::vector<std::int64_t>;

AbelianVector abelianize(const Word& w, const Alphabet& alphabet);

/// gcd of the absolute entries is 1. The zero vector has gcd 0.
bool homology_primitive(const AbelianVector& v);

/// Type II Whitehead automorphism (multiplier a, support A) acting by
/// x -> a^[x in A] x a^-[x^-1 in A] for x not in {a, a^-1}; a is fixed.
/// The support is a bitmask over letter indices, so ranks above 32 cannot be
/// represented.
class WhiteheadAut {
 public:
  static constexpr std::size_t kMaxRank = 32;

  WhiteheadAut(std::size_t rank, Letter multiplier, std::uint64_t support);
  WhiteheadAut(std::size_t rank, Letter multiplier, std::initializer_list<Letter> support);

  std::size_t rank() const { return rank_; }
  Letter multiplier() const { return multiplier_; }
  std::uint64_t support() const { return support_; }
  bool contains(Letter x) const { return (support_ >> x.index()) & 1U; }

  /// (A \ {a}) u {a^-1} with multiplier a^-1.
  WhiteheadAut inverse() const;

  /// Image of one letter, as at most three letters written into `out`.
  /// Returns the number written.
  std::size_t image(Letter x, Letter out[3]) const;

  auto operator<=>(const WhiteheadAut&) const = default;

 private:
  std::size_t rank_;
  Letter multiplier_;
  std::uint64_t support_;
};

/// Throws InvalidArgument when the word uses generators beyond the rank.
Word apply_whitehead_aut(const WhiteheadAut& sigma, const Word& w);

/// Cyclic length of sigma applied to a cyclic word; `scratch` is reused.
std::size_t image_cyclic_length(const WhiteheadAut& sigma, std::span<const Letter> cyclic,
                                std::vector<Letter>& scratch);

/// All non-identity type II automorphisms, ordered by multiplier index then
/// support mask. Count is 2n * (2^(2n-2) - 1).
std::vector<WhiteheadAut> enumerate_whitehead_auts(const Alphabet& alphabet,
                                                   std::size_t rank_guard);

std::uint64_t whitehead_aut_count(std::size_t rank);

/// Visits, in enumeration order, the automorphisms with the given multiplier.
void for_each_whitehead_aut(std::size_t rank, Letter multiplier,
                            const std::function<void(const WhiteheadAut&)>& visit);

std::string describe(const WhiteheadAut& sigma, const Alphabet& alphabet);

}  // namespace fgcx

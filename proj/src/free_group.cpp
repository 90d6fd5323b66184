#include "fgcx/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "fgcx/errors.hpp"

namespace fgcx {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool valid_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), is_name_char);
}

// Appends a letter onto a freely reduced stack.
void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back() == x.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(x);
  }
}

constexpr long kMaxExponent = 1'000'000;

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InvalidArgument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("a" + std::to_string(i));
  return Alphabet(std::move(names));
}

std::size_t Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) push_reduced(letters_, x);
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

std::size_t Word::min_rank() const {
  std::size_t r = 0;
  for (Letter x : letters_) r = std::max<std::size_t>(r, x.gen() + 1);
  return r;
}

Word operator*(const Word& u, const Word& v) {
  Word r = u;
  for (Letter x : v.letters_) push_reduced(r.letters_, x);
  return r;
}

Word free_reduce(std::span<const Letter> letters) { return Word(letters); }

std::size_t cyclic_length(std::span<const Letter> reduced) {
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

CyclicWord make_cyclic(std::span<const Letter> letters) {
  CyclicWord c;
  const std::size_t n = letters.size();
  if (n == 0) return c;
  // Least rotation by direct comparison; words here are short.
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter x = letters[(r + i) % n];
      Letter y = letters[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  c.letters_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.letters_.push_back(letters[(best + i) % n]);
  return c;
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  auto core = letters.subspan(lo, hi - lo);
  CyclicReduction out;
  out.cyclic = make_cyclic(core);

  // core = p * c * p^-1 where c is the canonical rotation starting at offset r.
  std::size_t rotation = 0;
  for (std::size_t r = 0; r < core.size(); ++r) {
    if (std::equal(core.begin() + static_cast<std::ptrdiff_t>(r), core.end(),
                   out.cyclic.letters().begin())) {
      rotation = r;
      break;
    }
  }
  out.conjugator = Word(letters.first(lo)) * Word(core.first(rotation));
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
  };
  auto skip_separators = [&] {
    bool star = false;
    while (i < n && (is_space(text[i]) || text[i] == '*')) {
      if (text[i] == '*') {
        if (star) fail("repeated '*'");
        star = true;
      }
      ++i;
    }
  };

  skip_separators();
  while (i < n) {
    if (text[i] == '^') fail("empty exponent base");
    if (!is_name_start(text[i])) fail(std::string("unexpected character '") + text[i] + "'");
    std::size_t start = i;
    while (i < n && is_name_char(text[i])) ++i;
    std::string name(text.substr(start, i - start));
    int sign = 1;
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      sign = -1;
    }
    std::size_t gen = alphabet.find(name);
    if (gen == alphabet.rank()) {
      i = start;
      fail("unknown generator '" + name + "'");
    }

    long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < n && text[i] == '-') {
        negative = true;
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("malformed exponent");
      long value = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxExponent) fail("exponent too large");
        ++i;
      }
      exponent = negative ? -value : value;
    }
    if (i < n && !is_space(text[i]) && text[i] != '*') fail("malformed token");

    Letter x(static_cast<std::uint32_t>(gen), exponent < 0 ? -sign : sign);
    for (long e = 0; e < std::labs(exponent); ++e) raw.push_back(x);
    skip_separators();
  }
  return Word(raw);
}

std::string serialize(std::span<const Letter> letters, const Alphabet& alphabet) {
  std::string out;
  for (Letter x : letters) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(x.gen());
    if (!x.positive()) out += "^-1";
  }
  return out;
}

AbelianVector abelianize(const Word& w, const Alphabet& alphabet) {
  AbelianVector v(alphabet.rank(), 0);
  for (Letter x : w.letters()) {
    if (x.gen() >= v.size()) throw InvalidArgument("word uses a generator outside the alphabet");
    v[x.gen()] += x.sign();
  }
  return v;
}

bool homology_primitive(const AbelianVector& v) {
  std::int64_t g = 0;
  for (std::int64_t e : v) g = std::gcd(g, e);
  return g == 1;
}

WhiteheadAut::WhiteheadAut(std::size_t rank, Letter multiplier, std::uint64_t support)
    : rank_(rank), multiplier_(multiplier), support_(support) {
  if (rank == 0 || rank > kMaxRank) throw InvalidArgument("Whitehead automorphism rank out of range");
  if (multiplier.gen() >= rank) throw InvalidArgument("multiplier outside the alphabet");
  if (2 * rank < 64 && (support >> (2 * rank)) != 0) {
    throw InvalidArgument("support contains letters outside the alphabet");
  }
  if (!contains(multiplier)) throw InvalidArgument("support must contain the multiplier");
  if (contains(multiplier.inverse())) throw InvalidArgument("support must not contain the multiplier's inverse");
}

WhiteheadAut::WhiteheadAut(std::size_t rank, Letter multiplier, std::initializer_list<Letter> support)
    : WhiteheadAut(rank, multiplier, [&] {
        std::uint64_t mask = 0;
        for (Letter x : support) mask |= std::uint64_t{1} << x.index();
        return mask;
      }()) {}

WhiteheadAut WhiteheadAut::inverse() const {
  std::uint64_t mask = support_;
  mask &= ~(std::uint64_t{1} << multiplier_.index());
  mask |= std::uint64_t{1} << multiplier_.inverse().index();
  return WhiteheadAut(rank_, multiplier_.inverse(), mask);
}

std::size_t WhiteheadAut::image(Letter x, Letter out[3]) const {
  if (x.gen() == multiplier_.gen()) {
    out[0] = x;
    return 1;
  }
  std::size_t n = 0;
  if (contains(x)) out[n++] = multiplier_;
  out[n++] = x;
  if (contains(x.inverse())) out[n++] = multiplier_.inverse();
  return n;
}

Word apply_whitehead_aut(const WhiteheadAut& sigma, const Word& w) {
  if (w.min_rank() > sigma.rank()) throw InvalidArgument("word and automorphism use different alphabets");
  std::vector<Letter> out;
  out.reserve(3 * w.size());
  Letter buf[3];
  for (Letter x : w.letters()) {
    std::size_t m = sigma.image(x, buf);
    for (std::size_t j = 0; j < m; ++j) push_reduced(out, buf[j]);
  }
  return Word(out);
}

std::size_t image_cyclic_length(const WhiteheadAut& sigma, std::span<const Letter> cyclic,
                                std::vector<Letter>& scratch) {
  scratch.clear();
  Letter buf[3];
  for (Letter x : cyclic) {
    std::size_t m = sigma.image(x, buf);
    for (std::size_t j = 0; j < m; ++j) push_reduced(scratch, buf[j]);
  }
  return cyclic_length(scratch);
}

std::uint64_t whitehead_aut_count(std::size_t rank) {
  if (rank == 0) return 0;
  return 2 * rank * ((std::uint64_t{1} << (2 * rank - 2)) - 1);
}

void for_each_whitehead_aut(std::size_t rank, Letter a,
                            const std::function<void(const WhiteheadAut&)>& visit) {
  if (rank == 0 || rank > WhiteheadAut::kMaxRank / 2) throw InvalidArgument("enumeration rank out of range");
  const std::uint64_t all = (std::uint64_t{1} << (2 * rank)) - 1;
  const std::uint64_t self = std::uint64_t{1} << a.index();
  const std::uint64_t free = all & ~(self | (std::uint64_t{1} << a.inverse().index()));
  // Subsets of `free` in increasing numeric order; the empty subset is the identity.
  for (std::uint64_t sub = (0 - free) & free; sub != 0; sub = (sub - free) & free) {
    visit(WhiteheadAut(rank, a, sub | self));
  }
}

std::vector<WhiteheadAut> enumerate_whitehead_auts(const Alphabet& alphabet, std::size_t rank_guard) {
  const std::size_t n = alphabet.rank();
  if (n == 0) throw InvalidArgument("enumeration needs rank >= 1");
  if (n > rank_guard || n > WhiteheadAut::kMaxRank / 2) throw RankGuardError(n, rank_guard);

  std::vector<WhiteheadAut> out;
  out.reserve(whitehead_aut_count(n));
  for (std::uint32_t m = 0; m < 2 * n; ++m) {
    for_each_whitehead_aut(n, Letter::from_index(m), [&](const WhiteheadAut& s) { out.push_back(s); });
  }
  return out;
}

std::string describe(const WhiteheadAut& sigma, const Alphabet& alphabet) {
  std::string out = "(";
  const Letter a[1] = {sigma.multiplier()};
  out += serialize(a, alphabet);
  out += "; {";
  bool first = true;
  for (std::uint32_t i = 0; i < 2 * sigma.rank(); ++i) {
    Letter x = Letter::from_index(i);
    if (!sigma.contains(x)) continue;
    if (!first) out += ", ";
    first = false;
    const Letter tmp[1] = {x};
    out += serialize(tmp, alphabet);
  }
  out += "})";
  return out;
}

}  // namespace fgcx

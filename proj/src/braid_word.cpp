#include "braid3/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "braid3/errors.hpp"

namespace braid3 {

Generator tau(long i) noexcept {
  switch (((i % 3) + 3) % 3) {
    case 1:
      return Generator::A;
    case 2:
      return Generator::B;
    default:
      return Generator::X;
  }
}

int tau_index(Generator g) noexcept {
  switch (g) {
    case Generator::A:
      return 1;
    case Generator::B:
      return 2;
    default:
      return 0;
  }
}

void BraidWord::append_power(Generator g, long power) {
  const int sign = power < 0 ? -1 : 1;
  for (long k = 0; k < std::labs(power); ++k) letters_.push_back({g, sign});
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(std::move(out));
}

BraidWord power_word(Generator g, long power) {
  BraidWord w;
  w.append_power(g, power);
  return w;
}

namespace {

bool generator_from_char(char c, Generator& g, int& sign) {
  switch (c) {
    case 'a': g = Generator::A; sign = 1; return true;
    case 'b': g = Generator::B; sign = 1; return true;
    case 'x': g = Generator::X; sign = 1; return true;
    case 'd': g = Generator::Delta; sign = 1; return true;
    case 'A': g = Generator::A; sign = -1; return true;
    case 'B': g = Generator::B; sign = -1; return true;
    case 'X': g = Generator::X; sign = -1; return true;
    case 'D': g = Generator::Delta; sign = -1; return true;
    default: return false;
  }
}

char generator_char(Generator g) {
  switch (g) {
    case Generator::A: return 'a';
    case Generator::B: return 'b';
    case Generator::X: return 'x';
    default: return 'd';
  }
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

BraidWord parse_braid_word(std::string_view text, std::size_t max_letters) {
  BraidWord w;
  std::size_t total = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    Generator g{};
    int sign = 1;
    if (!generator_from_char(c, g, sign)) {
      throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    ++i;
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      int exp_sign = 1;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        exp_sign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      const std::size_t digits_start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (value > (std::numeric_limits<long>::max() - 9) / 10) {
          throw ResourceError("power at byte " + std::to_string(caret) + " is too large");
        }
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (i == digits_start) {
        throw SyntaxError(i, "expected an integer after '^'");
      }
      power = exp_sign * value;
    }
    total += static_cast<std::size_t>(std::labs(power));
    if (total > max_letters) {
      throw ResourceError("word expands to more than " + std::to_string(max_letters) +
                          " letters");
    }
    w.append_power(g, sign * power);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  const auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long power = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += generator_char(letters[i].gen);
    if (power != 1) out += '^' + std::to_string(power);
    i = j;
  }
  return out;
}

long writhe(const BraidWord& w) noexcept {
  long total = 0;
  for (const Letter& l : w) total += l.sign * (l.gen == Generator::Delta ? 2 : 1);
  return total;
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const noexcept {
  StrandPermutation out;
  for (int s = 0; s < 3; ++s) out.images[s] = next.images[images[s]];
  return out;
}

int StrandPermutation::cycle_count() const noexcept {
  std::array<bool, 3> seen{};
  int cycles = 0;
  for (int s = 0; s < 3; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int p = s; !seen[p]; p = images[p]) seen[p] = true;
  }
  return cycles;
}

std::array<int, 3> StrandPermutation::cycle_type() const noexcept {
  std::array<int, 3> lengths{0, 0, 0};
  std::array<bool, 3> seen{};
  int k = 0;
  for (int s = 0; s < 3; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int p = s; !seen[p]; p = images[p]) {
      seen[p] = true;
      ++len;
    }
    lengths[k++] = len;
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

StrandPermutation permutation_of(Letter l) noexcept {
  switch (l.gen) {
    case Generator::A:
      return {{1, 0, 2}};
    case Generator::B:
      return {{0, 2, 1}};
    case Generator::X:
      return {{2, 1, 0}};
    default:
      // delta = b a sends 1 -> 2 -> 3 -> 1; its inverse runs the other way.
      return l.sign > 0 ? StrandPermutation{{1, 2, 0}} : StrandPermutation{{2, 0, 1}};
  }
}

StrandPermutation permutation_of(const BraidWord& w) noexcept {
  StrandPermutation p;
  for (const Letter& l : w) p = p.then(permutation_of(l));
  return p;
}

int closure_components(const BraidWord& w) noexcept { return permutation_of(w).cycle_count(); }

BraidWord reverse_braid(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    Letter l = *it;
    if (l.gen == Generator::A) {
      l.gen = Generator::B;
    } else if (l.gen == Generator::B) {
      l.gen = Generator::A;
    }
    out.push_back(l);
  }
  return BraidWord(std::move(out));
}

BraidWord expand_to_standard(const BraidWord& w) {
  constexpr Letter a{Generator::A, 1}, b{Generator::B, 1};
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (const Letter& l : w) {
    switch (l.gen) {
      case Generator::A:
      case Generator::B:
        out.push_back(l);
        break;
      case Generator::X:
        // x = A b a, X = A B a
        out.push_back(a.inverse());
        out.push_back({Generator::B, l.sign});
        out.push_back(a);
        break;
      case Generator::Delta:
        if (l.sign > 0) {
          out.push_back(b);
          out.push_back(a);
        } else {
          out.push_back(a.inverse());
          out.push_back(b.inverse());
        }
        break;
    }
  }
  return BraidWord(std::move(out));
}

BraidWord mirror_braid(const BraidWord& w) {
  std::vector<Letter> out;
  for (const Letter& l : expand_to_standard(w)) out.push_back(l.inverse());
  return BraidWord(std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(std::move(out));
}

}  // namespace braid3

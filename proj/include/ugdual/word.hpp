#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ugdual {

struct Letter {
  std::uint32_t id = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class GeneratorKind { LocallyNilpotent, DiagonalizableInteger };

std::string_view to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view text);

/// Element of the free monoid on the alphabet. Ordered shortlex: by length,
/// then lexicographically on letter ids.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<std::uint32_t> ids);

  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] std::set<Letter> support() const;
  [[nodiscard]] Word reversed() const;
  /// Letters in positions [pos, pos+count).
  [[nodiscard]] Word subword(std::size_t pos, std::size_t count) const;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& w1, const Word& w2);

/// All interleavings of w1 and w2 with multiplicities. The total multiplicity
/// is binomial(l1 + l2, l1).
std::map<Word, std::uint64_t> shuffles(const Word& w1, const Word& w2);

/// Prefixes of w, from the empty word up to w itself.
std::vector<Word> r_cut(const Word& w);

/// Named letters with their one-parameter kinds. Letter i is the i-th entry.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> names, std::vector<GeneratorKind> kinds);
  /// All letters locally nilpotent.
  explicit Alphabet(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(Letter l) const;
  [[nodiscard]] GeneratorKind kind(Letter l) const;
  [[nodiscard]] Letter letter(std::string_view name) const;
  [[nodiscard]] bool contains(Letter l) const { return l.id < names_.size(); }
  [[nodiscard]] std::vector<Letter> letters() const;
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::vector<GeneratorKind>& kinds() const { return kinds_; }

  /// "e1.e2"; the empty word is "1".
  [[nodiscard]] std::string format(const Word& w) const;
  [[nodiscard]] Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<GeneratorKind> kinds_;
};

/// Alphabet "e1", ..., "en", all locally nilpotent.
Alphabet standard_alphabet(std::size_t n);

/// All words of length exactly `length` over the first `letters` letters,
/// in shortlex order.
std::vector<Word> words_of_length(std::size_t letters, std::size_t length);
/// All words of length <= max_length, shortlex order.
std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length);

}  // namespace ugdual

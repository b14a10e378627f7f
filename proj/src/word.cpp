#include "ugdual/word.hpp"

#include <algorithm>

#include "ugdual/errors.hpp"

namespace ugdual {

std::string_view to_string(GeneratorKind kind) {
  return kind == GeneratorKind::LocallyNilpotent ? "locally-nilpotent" : "diagonalizable-integer";
}

GeneratorKind generator_kind_from_string(std::string_view text) {
  if (text == "locally-nilpotent" || text == "nilpotent") return GeneratorKind::LocallyNilpotent;
  if (text == "diagonalizable-integer" || text == "diagonal") return GeneratorKind::DiagonalizableInteger;
  throw ValidationError("unknown generator kind '" + std::string(text) + "'");
}

Word::Word(std::initializer_list<std::uint32_t> ids) {
  letters_.reserve(ids.size());
  for (auto id : ids) letters_.push_back(Letter{id});
}

std::set<Letter> Word::support() const { return {letters_.begin(), letters_.end()}; }

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::subword(std::size_t pos, std::size_t count) const {
  const auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Word concat(const Word& w1, const Word& w2) {
  std::vector<Letter> out = w1.letters();
  out.insert(out.end(), w2.begin(), w2.end());
  return Word(std::move(out));
}

namespace {

void shuffle_into(const Word& a, std::size_t i, const Word& b, std::size_t j, std::vector<Letter>& prefix,
                  std::map<Word, std::uint64_t>& out) {
  if (i == a.length() && j == b.length()) {
    ++out[Word(prefix)];
    return;
  }
  if (i < a.length()) {
    prefix.push_back(a[i]);
    shuffle_into(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.length()) {
    prefix.push_back(b[j]);
    shuffle_into(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::map<Word, std::uint64_t> shuffles(const Word& w1, const Word& w2) {
  // Each branch fixes whether the next output position belongs to I1 or I2,
  // so the leaves are in bijection with the index-set pairs (I1, I2).
  std::map<Word, std::uint64_t> out;
  std::vector<Letter> prefix;
  prefix.reserve(w1.length() + w2.length());
  shuffle_into(w1, 0, w2, 0, prefix, out);
  return out;
}

std::vector<Word> r_cut(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.length() + 1);
  for (std::size_t k = 0; k <= w.length(); ++k) out.push_back(w.subword(0, k));
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<GeneratorKind> kinds)
    : names_(std::move(names)), kinds_(std::move(kinds)) {
  if (names_.size() != kinds_.size()) throw ValidationError("alphabet: names and kinds differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || n == "1" || n.find('.') != std::string::npos) {
      throw ValidationError("alphabet: invalid letter name '" + n + "'");
    }
    if (std::count(names_.begin(), names_.end(), n) > 1) {
      throw ValidationError("alphabet: duplicate letter name '" + n + "'");
    }
  }
}

Alphabet::Alphabet(std::vector<std::string> names)
    : Alphabet(names, std::vector<GeneratorKind>(names.size(), GeneratorKind::LocallyNilpotent)) {}

const std::string& Alphabet::name(Letter l) const {
  if (!contains(l)) throw ValidationError("letter id " + std::to_string(l.id) + " outside alphabet");
  return names_[l.id];
}

GeneratorKind Alphabet::kind(Letter l) const {
  if (!contains(l)) throw ValidationError("letter id " + std::to_string(l.id) + " outside alphabet");
  return kinds_[l.id];
}

Letter Alphabet::letter(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Letter{static_cast<std::uint32_t>(i)};
  }
  throw ValidationError("unknown letter '" + std::string(name) + "'");
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Letter{static_cast<std::uint32_t>(i)});
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  if (text == "1" || text.empty()) return {};
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    letters.push_back(letter(text.substr(start, dot == std::string_view::npos ? dot : dot - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Word(std::move(letters));
}

Alphabet standard_alphabet(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return Alphabet(std::move(names));
}

std::vector<Word> words_of_length(std::size_t letters, std::size_t length) {
  std::vector<Word> out;
  if (letters == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<Letter> current(length, Letter{0});
  while (true) {
    out.emplace_back(current);
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (current[pos].id + 1 < letters) {
        ++current[pos].id;
        for (std::size_t k = pos + 1; k < length; ++k) current[k].id = 0;
        break;
      }
      if (pos == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto layer = words_of_length(letters, l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace ugdual

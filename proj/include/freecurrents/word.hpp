// Copyright 2026 The freecurrents Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Freely reduced words over a free basis of finite rank.
//
// Letters are signed generator indices: +i is the i-th generator, -i its
// inverse. Text uses one character per letter: lowercase for a generator,
// uppercase for its inverse. Ranks up to 3 use x, y, z; larger ranks use
// a, b, c, d, f, g, ... ('e' is reserved for the identity).

#ifndef FREECURRENTS_WORD_HPP_
#define FREECURRENTS_WORD_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freecurrents/error.hpp"

namespace freecurrents {

class Basis {
 public:
  static constexpr int kMaxRank = 25;

  explicit constexpr Basis(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) {
      throw DomainError("basis rank must lie in 1.." + std::to_string(kMaxRank) +
                        ", got " + std::to_string(rank));
    }
  }

  constexpr int rank() const noexcept { return rank_; }
  constexpr bool valid_letter(int letter) const noexcept {
    return letter != 0 && std::abs(letter) <= rank_;
  }

  char symbol(int letter) const {
    if (!valid_letter(letter)) throw DomainError("letter out of range");
    char c = alphabet()[static_cast<std::size_t>(std::abs(letter) - 1)];
    return letter > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }

  // Returns 0 when c is not a letter of this basis.
  int letter(char c) const noexcept {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto pos = alphabet().find(lower);
    if (pos == std::string_view::npos || static_cast<int>(pos) >= rank_) return 0;
    int g = static_cast<int>(pos) + 1;
    return std::isupper(static_cast<unsigned char>(c)) ? -g : g;
  }

  friend constexpr bool operator==(Basis, Basis) = default;

 private:
  std::string_view alphabet() const noexcept {
    return rank_ <= 3 ? std::string_view("xyz") : std::string_view("abcdfghijklmnopqrstuvwxyz");
  }

  int rank_;
};

// Position of a letter in the total order x < X < y < Y < ...
constexpr int letter_key(int letter) noexcept {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

// Inverse of letter_key.
constexpr int letter_from_key(int key) noexcept {
  return (key % 2 == 0) ? key / 2 + 1 : -(key / 2 + 1);
}

class Word {
 public:
  explicit Word(Basis basis) : basis_(basis) {}

  Basis basis() const noexcept { return basis_; }
  int rank() const noexcept { return basis_.rank(); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  int back() const { return letters_.back(); }

  // Appends a letter, cancelling against the last one if they are inverse.
  void push(int letter) {
    if (!basis_.valid_letter(letter)) {
      throw DomainError("letter " + std::to_string(letter) + " out of range for rank " +
                        std::to_string(rank()));
    }
    if (!letters_.empty() && letters_.back() == -letter) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }

  // Shortlex: length first, then lexicographic under letter_key.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = letter_key(a.letters_[i]) <=> letter_key(b.letters_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.basis_ == b.basis_ && a.letters_ == b.letters_;
  }

 private:
  Basis basis_;
  std::vector<int> letters_;
};

inline void require_same_basis(Basis a, Basis b) {
  if (a != b) {
    throw DomainError("basis mismatch: rank " + std::to_string(a.rank()) + " vs rank " +
                      std::to_string(b.rank()));
  }
}

inline Word reduce(Basis basis, std::span<const int> letters) {
  Word w(basis);
  for (int l : letters) w.push(l);
  return w;
}

inline Word concat(const Word& a, const Word& b) {
  require_same_basis(a.basis(), b.basis());
  Word w = a;
  for (int l : b.letters()) w.push(l);
  return w;
}

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

inline Word invert(const Word& w) {
  Word out(w.basis());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push(-*it);
  return out;
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
inline CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0;
  std::size_t j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return {reduce(w.basis(), std::span(l).subspan(i, j - i)),
          reduce(w.basis(), std::span(l).first(i))};
}

// Image of w under the homomorphism sending generator i of w's basis to
// images[i - 1].
inline Word substitute(const Word& w, std::span<const Word> images, Basis target) {
  if (images.size() != static_cast<std::size_t>(w.rank())) {
    throw DomainError("substitution needs one image per generator");
  }
  Word out(target);
  for (int l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    require_same_basis(img.basis(), target);
    out = concat(out, l > 0 ? img : invert(img));
  }
  return out;
}

inline Word letter_word(Basis basis, int letter) {
  Word w(basis);
  w.push(letter);
  return w;
}

// Compact form, "e" for the identity.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  s.reserve(w.size());
  for (int l : w.letters()) s.push_back(w.basis().symbol(l));
  return s;
}

// Accepts compact ("xyX"), spaced ("x y x^-1") and power ("y^3") forms;
// "e" and "1" denote the identity.
inline Word parse_word(std::string_view text, Basis basis) {
  Word w(basis);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw FormatError("cannot parse word '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 'e' || c == '1') {
      ++i;
      continue;
    }
    int letter = basis.letter(c);
    if (letter == 0) fail(std::string("unknown letter '") + c + "'");
    ++i;
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || i - start > 6) fail("bad exponent");
      power = std::stol(std::string(text.substr(start, i - start)));
      if (negative) power = -power;
    }
    int signed_letter = power < 0 ? -letter : letter;
    for (long k = 0; k < std::labs(power); ++k) w.push(signed_letter);
  }
  return w;
}

}  // namespace freecurrents

template <>
struct std::hash<freecurrents::Word> {
  std::size_t operator()(const freecurrents::Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.rank());
    for (int l : w.letters()) h = h * 1000003u ^ static_cast<std::size_t>(l + 64);
    return h;
  }
};

#endif  // FREECURRENTS_WORD_HPP_

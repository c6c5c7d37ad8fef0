#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordeq {

// A word over {X,A} in exponent-vector form: (a_0,...,a_n) encodes
// A^{a_0} X A^{a_1} X ... A^{a_{n-1}} X A^{a_n}, with n = number of X's.
// Pure powers of A (including the empty word) have n = 0 and a single entry.
struct Word {
  std::vector<int> exponents{0};

  Word() = default;
  explicit Word(std::vector<int> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) throw std::invalid_argument("Word: exponent vector must be nonempty");
    for (int a : exponents)
      if (a < 0) throw std::invalid_argument("Word: negative exponent");
  }

  int x_count() const { return static_cast<int>(exponents.size()) - 1; }
  long long a_count() const { return std::accumulate(exponents.begin(), exponents.end(), 0LL); }
  long long length() const { return x_count() + a_count(); }
  bool empty() const { return length() == 0; }

  static Word letter_x() { return Word({0, 0}); }
  static Word letter_a() { return Word({1}); }

  bool operator==(const Word&) const = default;
};

struct WordParseError : std::runtime_error {
  std::size_t position;
  WordParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Compact rendering: runs of equal letters with caret exponents, e.g. "X^2AX".
inline std::string render(const Word& w) {
  std::string out;
  auto emit = [&out](char c, long long count) {
    if (count <= 0) return;
    out += c;
    if (count > 1) out += '^' + std::to_string(count);
  };
  const auto& e = w.exponents;
  const int n = w.x_count();
  emit('A', e[0]);
  int i = 1;
  while (i <= n) {
    int xrun = 1;
    while (i < n && e[i] == 0) {
      ++xrun;
      ++i;
    }
    emit('X', xrun);
    emit('A', e[i]);
    ++i;
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  std::vector<int> exps;
  int pending_a = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c != 'X' && c != 'A') throw WordParseError("expected letter 'X' or 'A'", i);
    ++i;
    long long exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw WordParseError("expected positive integer after '^'", i);
      exp = 0;
      for (std::size_t j = start; j < i; ++j) {
        exp = exp * 10 + (text[j] - '0');
        if (exp > 1000000) throw WordParseError("exponent too large", start);
      }
      if (exp == 0) throw WordParseError("exponent 0 is not allowed", start);
    }
    if (c == 'A') {
      pending_a += static_cast<int>(exp);
    } else {
      for (long long r = 0; r < exp; ++r) {
        exps.push_back(pending_a);
        pending_a = 0;
      }
    }
    skip_ws();
  }
  exps.push_back(pending_a);
  return Word(std::move(exps));
}

inline std::string to_letters(const Word& w) {
  std::string s;
  s.reserve(static_cast<std::size_t>(w.length()));
  const int n = w.x_count();
  for (int i = 0; i <= n; ++i) {
    if (i > 0) s += 'X';
    s.append(static_cast<std::size_t>(w.exponents[i]), 'A');
  }
  return s;
}

inline Word from_letters(std::string_view s) {
  std::vector<int> exps;
  int pending = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'A') {
      ++pending;
    } else if (s[i] == 'X') {
      exps.push_back(pending);
      pending = 0;
    } else {
      throw WordParseError("expected letter 'X' or 'A'", i);
    }
  }
  exps.push_back(pending);
  return Word(std::move(exps));
}

// u with every X replaced by w.
inline Word compose(const Word& u, const Word& w) {
  const int nu = u.x_count();
  if (nu == 0) return u;
  const int nw = w.x_count();
  const auto& b = u.exponents;
  const auto& a = w.exponents;
  if (nw == 0) {
    long long total = 0;
    for (int e : b) total += e;
    total += static_cast<long long>(nu) * a[0];
    return Word({static_cast<int>(total)});
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(nu) * nw + 1);
  out.push_back(b[0] + a[0]);
  for (int copy = 0; copy < nu; ++copy) {
    for (int j = 1; j < nw; ++j) out.push_back(a[j]);
    if (copy + 1 < nu)
      out.push_back(a[nw] + b[copy + 1] + a[0]);
    else
      out.push_back(a[nw] + b[copy + 1]);
  }
  return Word(std::move(out));
}

struct Morphism {
  enum class Kind { L, R, Pi };
  Kind kind = Kind::L;
  int m = 0;
  int k = 0;

  static Morphism l() { return {Kind::L, 0, 0}; }
  static Morphism r() { return {Kind::R, 0, 0}; }
  static Morphism pi(int m, int k) {
    if (m < 1 || k < 0) throw std::invalid_argument("Morphism::pi requires m >= 1, k >= 0");
    return {Kind::Pi, m, k};
  }

  bool operator==(const Morphism&) const = default;
};

inline std::string to_string(const Morphism& phi) {
  switch (phi.kind) {
    case Morphism::Kind::L: return "l";
    case Morphism::Kind::R: return "r";
    default: return "pi(" + std::to_string(phi.m) + "," + std::to_string(phi.k) + ")";
  }
}

// L prepends A, R appends A, Pi(m,k) maps w to (w A^k)^m w.
inline Word apply_morphism(const Morphism& phi, const Word& w) {
  std::vector<int> e = w.exponents;
  switch (phi.kind) {
    case Morphism::Kind::L:
      e.front() += 1;
      return Word(std::move(e));
    case Morphism::Kind::R:
      e.back() += 1;
      return Word(std::move(e));
    case Morphism::Kind::Pi: {
      const int n = w.x_count();
      const int m = phi.m, k = phi.k;
      if (n == 0) return Word({e[0] + m * (e[0] + k)});
      std::vector<int> out;
      out.reserve(static_cast<std::size_t>(n) * (m + 1) + 1);
      for (int i = 0; i < n; ++i) out.push_back(e[i]);
      for (int block = 0; block < m; ++block) {
        out.push_back(e[n] + k + e[0]);
        for (int i = 1; i < n; ++i) out.push_back(e[i]);
      }
      out.push_back(e[n]);
      return Word(std::move(out));
    }
  }
  throw std::logic_error("apply_morphism: unreachable");
}

// Ordered innermost-first: replaying from X applies morphisms[0] first.
struct DecompositionWitness {
  std::vector<Morphism> morphisms;
  bool operator==(const DecompositionWitness&) const = default;
};

inline Word replay(const DecompositionWitness& witness) {
  Word w = Word::letter_x();
  for (const auto& phi : witness.morphisms) w = apply_morphism(phi, w);
  return w;
}

inline std::string to_string(const DecompositionWitness& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.morphisms.size(); ++i) {
    if (i) out += ";";
    out += to_string(witness.morphisms[i]);
  }
  return out;
}

// Decides total decomposability and returns a witness when one exists.
//
// Search over the last-applied map: strip a leading A (L), strip a trailing A
// (R), or undo Pi(m,k) for every factorization w = (v A^k)^m v, enumerated by
// increasing |v|. Every branch strictly shortens the word, so the recursion
// terminates; results for words of length <= memo_budget are cached by their
// rendered text.
inline std::optional<DecompositionWitness> decompose(const Word& w, int memo_budget = 32) {
  std::unordered_map<std::string, std::optional<std::vector<Morphism>>> memo;

  auto rec = [&](auto&& self, const std::string& s) -> std::optional<std::vector<Morphism>> {
    const int len = static_cast<int>(s.size());
    if (s == "X") return std::vector<Morphism>{};
    if (s.find('X') == std::string::npos) return std::nullopt;
    const bool cached = len <= memo_budget;
    if (cached) {
      auto it = memo.find(s);
      if (it != memo.end()) return it->second;
    }
    std::optional<std::vector<Morphism>> result;
    if (s.front() == 'A') {
      if (auto sub = self(self, s.substr(1))) {
        sub->push_back(Morphism::l());
        result = std::move(sub);
      }
    }
    if (!result && s.back() == 'A') {
      if (auto sub = self(self, s.substr(0, s.size() - 1))) {
        sub->push_back(Morphism::r());
        result = std::move(sub);
      }
    }
    if (!result) {
      for (int lv = 1; lv < len && !result; ++lv) {
        for (int m = 1; (m + 1) * lv <= len && !result; ++m) {
          const int rem = len - (m + 1) * lv;
          if (rem % m != 0) continue;
          const int k = rem / m;
          const int period = lv + k;
          bool match = true;
          for (int b = 0; b < m && match; ++b) {
            const int off = b * period;
            for (int i = 0; i < lv && match; ++i) match = s[off + i] == s[i];
            for (int i = 0; i < k && match; ++i) match = s[off + lv + i] == 'A';
          }
          const int tail = m * period;
          for (int i = 0; i < lv && match; ++i) match = s[tail + i] == s[i];
          if (!match) continue;
          if (auto sub = self(self, s.substr(0, lv))) {
            sub->push_back(Morphism::pi(m, k));
            result = std::move(sub);
          }
        }
      }
    }
    if (cached) memo[s] = result;
    return result;
  };

  auto morphisms = rec(rec, to_letters(w));
  if (!morphisms) return std::nullopt;
  return DecompositionWitness{std::move(*morphisms)};
}

// All words of length <= max_len in deterministic order: by length, then
// lexicographic with X < A. With canonical set, only words that begin and end
// with X (these contain at least one X).
inline std::vector<Word> enumerate_words(int max_len, bool canonical) {
  if (max_len < 1) throw std::invalid_argument("enumerate_words: max_len >= 1 required");
  if (max_len > 24) throw std::invalid_argument("enumerate_words: max_len too large");
  std::vector<Word> out;
  std::string letters;
  for (int len = 1; len <= max_len; ++len) {
    const std::uint32_t count = 1u << len;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (canonical) {
        const bool first_a = (mask >> (len - 1)) & 1u;
        const bool last_a = mask & 1u;
        if (first_a || last_a) continue;
      }
      letters.clear();
      for (int pos = 0; pos < len; ++pos) letters += ((mask >> (len - 1 - pos)) & 1u) ? 'A' : 'X';
      out.push_back(from_letters(letters));
    }
  }
  return out;
}

}  // namespace wordeq

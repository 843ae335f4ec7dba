#include "cyclicover/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace cyclicover {

void FreeWord::append_reduced(const std::string &gen, std::int64_t exp) {
  if (exp == 0)
    return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0)
      letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

FreeWord FreeWord::generator(std::string gen, std::int64_t exp) {
  FreeWord w;
  w.append_reduced(gen, exp);
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter> &raw) {
  FreeWord w;
  for (const auto &l : raw)
    w.append_reduced(l.gen, l.exp);
  return w;
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const auto &l : letters_)
    n += std::abs(l.exp);
  return n;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord operator*(const FreeWord &u, const FreeWord &v) {
  FreeWord w = u;
  for (const auto &l : v.letters_)
    w.append_reduced(l.gen, l.exp);
  return w;
}

FreeWord FreeWord::pow(std::int64_t e) const {
  if (e == 0 || letters_.empty())
    return FreeWord();
  if (letters_.size() == 1)
    return generator(letters_[0].gen, letters_[0].exp * e);
  FreeWord base = e > 0 ? *this : inverse();
  std::int64_t n = e > 0 ? e : -e;
  FreeWord acc;
  while (n > 0) { // square-and-multiply; reduction keeps sizes tight
    if (n & 1)
      acc = acc * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return acc;
}

FreeWord FreeWord::conjugated_by(const FreeWord &c) const {
  return c.inverse() * *this * c;
}

FreeWord FreeWord::cyclically_reduced() const {
  FreeWord w = *this;
  while (w.letters_.size() >= 2 && w.letters_.front().gen == w.letters_.back().gen) {
    // g^a u g^b is conjugate to g^(a+b) u
    std::int64_t e = w.letters_.front().exp + w.letters_.back().exp;
    std::string g = w.letters_.front().gen;
    std::vector<Letter> mid(w.letters_.begin() + 1, w.letters_.end() - 1);
    FreeWord next;
    next.append_reduced(g, e);
    for (const auto &l : mid)
      next.append_reduced(l.gen, l.exp);
    if (next == w)
      break;
    w = next;
  }
  return w;
}

FreeWord FreeWord::substituted(const std::string &gen, const FreeWord &replacement) const {
  FreeWord out;
  for (const auto &l : letters_) {
    if (l.gen == gen) {
      FreeWord block = replacement.pow(l.exp);
      for (const auto &r : block.letters())
        out.append_reduced(r.gen, r.exp);
    } else {
      out.append_reduced(l.gen, l.exp);
    }
  }
  return out;
}

std::int64_t FreeWord::exponent_sum(const std::string &gen) const {
  std::int64_t s = 0;
  for (const auto &l : letters_)
    if (l.gen == gen)
      s += l.exp;
  return s;
}

std::int64_t FreeWord::occurrences(const std::string &gen) const {
  std::int64_t s = 0;
  for (const auto &l : letters_)
    if (l.gen == gen)
      s += std::abs(l.exp);
  return s;
}

bool FreeWord::mentions(const std::string &gen) const {
  for (const auto &l : letters_)
    if (l.gen == gen)
      return true;
  return false;
}

std::string FreeWord::str() const {
  if (letters_.empty())
    return "1";
  std::string s;
  for (const auto &l : letters_) {
    if (!s.empty())
      s += ' ';
    s += l.gen;
    if (l.exp != 1)
      s += '^' + std::to_string(l.exp);
  }
  return s;
}

bool cyclically_equal(const FreeWord &a, const FreeWord &b) {
  const auto &la = a.letters();
  const auto &lb = b.letters();
  if (la.size() != lb.size())
    return false;
  if (la.empty())
    return true;
  for (std::size_t shift = 0; shift < la.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < la.size() && ok; ++i)
      ok = la[(shift + i) % la.size()] == lb[i];
    if (ok)
      return true;
  }
  return false;
}

} // namespace cyclicover

#include "braidch/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidch {

void validate(const BraidWord& w) {
  if (w.n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int k : w.letters) {
    int a = std::abs(k);
    if (a < 1 || a > w.n - 1)
      throw std::invalid_argument("letter " + std::to_string(k) + " out of range for " +
                                  std::to_string(w.n) + " strands");
  }
}

BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("braid text needs '<n>:' prefix");
  BraidWord w;
  {
    std::istringstream head(text.substr(0, colon));
    if (!(head >> w.n)) throw std::invalid_argument("bad strand count in braid text");
    std::string rest;
    if (head >> rest) throw std::invalid_argument("unexpected token before ':' in braid text");
  }
  std::istringstream body(text.substr(colon + 1));
  std::string tok;
  while (body >> tok) {
    std::size_t pos = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + tok + "' in braid text");
    }
    if (pos != tok.size()) throw std::invalid_argument("bad letter '" + tok + "' in braid text");
    if (k == 0) throw std::invalid_argument("letter 0 is not a braid generator");
    w.letters.push_back(k);
  }
  validate(w);
  return w;
}

std::string to_text(const BraidWord& w) {
  std::string s = std::to_string(w.n) + ":";
  for (int k : w.letters) s += " " + std::to_string(k);
  return s;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r{w.n, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("strand count mismatch in concat");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r{w.n, {}};
  for (int k : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -k)
      r.letters.pop_back();
    else
      r.letters.push_back(k);
  }
  return r;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.n != g.n) throw std::invalid_argument("strand count mismatch in conjugate");
  return free_reduce(concat(concat(g, w), inverse(g)));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
  BraidWord r{w.n + 1, w.letters};
  r.letters.push_back(sign * w.n);
  return r;
}

int Permutation::cycle_count() const {
  int n = size(), cycles = 0;
  std::vector<bool> seen(n, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int k = i; !seen[k - 1]; k = apply(k)) seen[k - 1] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation closure_permutation(const BraidWord& w) {
  validate(w);
  Permutation p;
  p.image.resize(w.n);
  for (int i = 0; i < w.n; ++i) p.image[i] = i + 1;
  for (int letter : w.letters) {
    int k = std::abs(letter);
    // strand currently at position k crosses with the one at k+1
    for (int& v : p.image) {
      if (v == k)
        v = k + 1;
      else if (v == k + 1)
        v = k;
    }
  }
  return p;
}

}  // namespace braidch

#include "fillsys/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fillsys/diagram.hpp"

namespace fillsys {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::vector<long> exponent_sums(const Word& w, int g) {
  std::vector<long> v(2 * g, 0);
  for (int l : w) v.at(std::abs(l) - 1) += l > 0 ? 1 : -1;
  return v;
}

SurfaceGroup::SurfaceGroup(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  // label chord i of S_2g by x_{i+1} on its least endpoint and read the cycle
  auto z = zigzag(2 * g);
  std::vector<int> lab(z.points());
  auto ch = z.chords();
  for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
    lab[ch[i].first] = i + 1;
    lab[ch[i].second] = -(i + 1);
  }
  auto cd = cycles(z);
  if (cd.b() != 1) throw std::logic_error("zigzag is not a 0-filling system");
  for (int p : cd.cycles[0]) relator_.push_back(lab[p]);
  const Word expected_g2{1, 3, -4, -3, -2, -1, 2, 4};
  if (g == 2 && relator_ != expected_g2)
    throw std::logic_error("genus-2 relator does not read x z w^-1 z^-1 y^-1 x^-1 y w");
  const int L = static_cast<int>(relator_.size());
  for (const Word& base : {relator_, inverse(relator_)})
    for (int r = 0; r < L; ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      sym_.push_back(std::move(rot));
    }
}

bool SurfaceGroup::dehn_step(Word& w) const {
  const int L = static_cast<int>(relator_.size());
  for (size_t i = 0; i < w.size(); ++i)
    for (const Word& r : sym_) {
      if (r[0] != w[i]) continue;
      int k = 0;
      while (k < L && i + k < w.size() && w[i + k] == r[k]) ++k;
      if (2 * k <= L) continue;
      // w[i, i+k) = r[0,k) equals the inverse of r[k, L)
      Word repl = inverse(Word(r.begin() + k, r.end()));
      Word next(w.begin(), w.begin() + i);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + i + k, w.end());
      w = free_reduce(next);
      return true;
    }
  return false;
}

Word SurfaceGroup::dehn_linear(Word w) const {
  w = free_reduce(w);
  while (dehn_step(w)) {
  }
  return w;
}

Word SurfaceGroup::reduce(const Word& w) const {
  if (g_ == 1) {
    auto e = exponent_sums(w, 1);
    Word out;
    for (int i = 0; i < 2; ++i)
      for (long k = 0; k < std::abs(e[i]); ++k) out.push_back(e[i] > 0 ? i + 1 : -(i + 1));
    return out;
  }
  return dehn_linear(w);
}

bool SurfaceGroup::is_trivial(const Word& w) const {
  for (int l : w)
    if (l == 0 || std::abs(l) > 2 * g_) throw std::out_of_range("generator index out of range");
  return reduce(w).empty();
}

bool SurfaceGroup::equal(const Word& a, const Word& b) const {
  return is_trivial(concat(a, inverse(b)));
}

bool SurfaceGroup::conjugate_of_relator(const Word& w) const {
  if (g_ < 2) throw std::invalid_argument("conjugate_of_relator needs genus >= 2");
  auto cyclic_free = [](Word c) {
    c = free_reduce(c);
    while (c.size() >= 2 && c.front() == -c.back()) {
      c.erase(c.begin());
      c.pop_back();
    }
    return c;
  };
  // one Dehn step at a time, checking before each: a whole relator would
  // otherwise be reduced away
  Word c = cyclic_free(w);
  for (;;) {
    if (std::find(sym_.begin(), sym_.end(), c) != sym_.end()) return true;
    bool stepped = false;
    for (size_t r = 0; r < c.size() && !stepped; ++r) {
      Word rot(c.begin() + r, c.end());
      rot.insert(rot.end(), c.begin(), c.begin() + r);
      if (dehn_step(rot)) {
        c = cyclic_free(rot);
        stepped = true;
      }
    }
    if (!stepped) return false;
  }
}

Word parse_word(std::string_view s, int g) {
  Word w;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1" || tok == "e") continue;
    int e = 1;
    auto caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::string ex = tok.substr(caret + 1);
      size_t used = 0;
      try {
        e = std::stoi(ex, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != ex.size()) throw std::invalid_argument("bad exponent in '" + tok + "'");
    }
    Word run;
    if (base.size() >= 2 && base[0] == 'x' &&
        std::all_of(base.begin() + 1, base.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      run.push_back(std::stoi(base.substr(1)));
    } else {
      // letter strings such as wxz or y'
      if (g != 2) throw std::invalid_argument("letter aliases need genus 2: '" + tok + "'");
      for (size_t i = 0; i < base.size(); ++i) {
        auto pos = std::string_view("xyzw").find(base[i]);
        if (pos == std::string_view::npos) throw std::invalid_argument("unknown generator in '" + tok + "'");
        int gen = static_cast<int>(pos) + 1;
        bool neg = i + 1 < base.size() && base[i + 1] == '\'';
        if (neg) ++i;
        run.push_back(neg ? -gen : gen);
      }
    }
    for (int l : run)
      if (std::abs(l) < 1 || std::abs(l) > 2 * g) throw std::invalid_argument("generator out of range in '" + tok + "'");
    if (e < 0) run = inverse(run);
    for (int k = 0; k < std::abs(e); ++k) w.insert(w.end(), run.begin(), run.end());
  }
  return free_reduce(w);
}

std::string format_word(const Word& w, int g) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    int a = std::abs(w[i]);
    if (g == 2)
      os << "xyzw"[a - 1];
    else
      os << 'x' << a;
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace fillsys

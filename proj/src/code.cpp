#include "ktc/code.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ktc {

Code::Code(int degree, std::vector<Permutation> words)
    : degree_(degree), words_(std::move(words)) {
  for (const auto& w : words_)
    if (w.degree() != degree_) throw std::invalid_argument("code: degree mismatch in word");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.size() < 2) throw std::invalid_argument("code requires at least 2 distinct words");
}

bool Code::contains(const Permutation& p) const {
  return std::binary_search(words_.begin(), words_.end(), p);
}

long long Code::min_distance() const {
  if (cached_min_distance_) return *cached_min_distance_;
  long long best = -1;
  for (size_t i = 0; i < words_.size() && best != 1; ++i)
    for (size_t j = i + 1; j < words_.size(); ++j) {
      const long long d = distance(words_[i], words_[j]);
      if (best < 0 || d < best) best = d;
      if (best == 1) break;
    }
  cached_min_distance_ = best;
  return best;
}

Code Code::parse(std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Permutation> words;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (degree < 0) {
      if (line.compare(start, 2, "n=") != 0)
        throw std::invalid_argument("code file must start with an n=<degree> header");
      degree = std::stoi(line.substr(start + 2));
      if (degree < 1) throw std::invalid_argument("invalid degree in code file header");
      continue;
    }
    words.push_back(Permutation::parse(line));
  }
  if (degree < 0) throw std::invalid_argument("missing n=<degree> header");
  return Code(degree, std::move(words));
}

void Code::serialize(std::ostream& out) const {
  out << "n=" << degree_ << '\n';
  for (const auto& w : words_) out << w.str() << '\n';
}

Code alternating_group(int n, bool allow_large) {
  if (n < 3) throw std::invalid_argument("alternating_group requires n >= 3");
  std::vector<Permutation> words;
  for_each_permutation(n, [&](const Permutation& p) {
    if (parity(p) == Parity::even) words.push_back(p);
  }, allow_large);
  return Code(n, std::move(words));
}

PuncturedCode puncture_code(const Code& c, const PunctureSet& s) {
  if (s.degree != c.degree()) throw std::invalid_argument("puncture_code: degree mismatch");
  PuncturedCode out;
  out.pre_size = c.size();
  out.words.reserve(c.size());
  for (const auto& w : c.words()) out.words.push_back(puncture(w, s));
  std::sort(out.words.begin(), out.words.end());
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  out.post_size = out.words.size();
  return out;
}

std::vector<Permutation> fiber(const Code& c, int i, int j) {
  const int n = c.degree();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("fiber: index out of range");
  std::vector<Permutation> out;
  for (const auto& w : c.words())
    if (w(i) == j) out.push_back(w);
  return out;
}

BalanceVerdict check_balanced(const Code& c, int t) {
  const int n = c.degree();
  if (t < 1 || t > n) throw std::invalid_argument("check_balanced: t out of range");
  BalanceVerdict v;
  v.t = t;
  v.cardinality_ok = static_cast<long long>(c.size()) == factorial_ll(n) / factorial_ll(t);
  const long long d = c.min_distance();
  const long long cap = choose2(t);
  v.distance_ok = d > cap;
  if (!v.distance_ok) {
    for (size_t i = 0; i < c.size() && !v.distance_witness; ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (distance(c.words()[i], c.words()[j]) == d) {
          v.distance_witness = {c.words()[i], c.words()[j]};
          break;
        }
  }
  v.is_balanced = v.cardinality_ok && v.distance_ok;
  if (v.is_balanced && d != cap + 1) {
    // A balanced code must sit exactly at the distance cap plus one.
    v.mds_ok = false;
    v.detail = "internal consistency violation: balanced but min distance != C(t,2)+1";
  }
  std::ostringstream info;
  info << "n=" << n << " t=" << t << " |C|=" << c.size() << " d=" << d;
  if (v.detail.empty()) v.detail = info.str();
  return v;
}

StructureReport check_fiber_balance(const Code& c, int t) {
  const int n = c.degree();
  StructureReport r;
  const BalanceVerdict v = check_balanced(c, t);
  if (!v.is_balanced) {
    r.pass = false;
    r.detail = "code is not " + std::to_string(t) + "-balanced: " + v.detail;
    return r;
  }
  const size_t expect = c.size() / static_cast<size_t>(n);
  for (int pos : {1, n}) {
    for (int j = 1; j <= n; ++j) {
      const auto f = fiber(c, pos, j);
      if (f.size() != expect) {
        r.detail = "fiber (i=" + std::to_string(pos) + ", j=" + std::to_string(j) +
                   ") has size " + std::to_string(f.size()) + ", expected " +
                   std::to_string(expect);
        return r;
      }
      const auto keep = PunctureSet::complement_of(n, pos);
      PuncturedCode punct;
      punct.pre_size = f.size();
      for (const auto& w : f) punct.words.push_back(puncture(w, keep));
      std::sort(punct.words.begin(), punct.words.end());
      punct.words.erase(std::unique(punct.words.begin(), punct.words.end()), punct.words.end());
      punct.post_size = punct.words.size();
      if (punct.post_size != punct.pre_size) {
        r.detail = "puncturing fiber (i=" + std::to_string(pos) + ", j=" + std::to_string(j) +
                   ") collapsed " + std::to_string(punct.pre_size) + " -> " +
                   std::to_string(punct.post_size);
        return r;
      }
      if (punct.words.size() >= 2) {
        const Code sub(n - 1, punct.words);
        const auto subverdict = check_balanced(sub, t);
        if (!subverdict.is_balanced) {
          r.detail = "punctured fiber (i=" + std::to_string(pos) + ", j=" + std::to_string(j) +
                     ") is not " + std::to_string(t) + "-balanced: " + subverdict.detail;
          return r;
        }
        if (n - 1 >= t + 2) {
          const auto subreport = check_fiber_balance(sub, t);
          if (!subreport.pass) {
            r.detail = "recursive failure under fiber (i=" + std::to_string(pos) + ", j=" +
                       std::to_string(j) + "): " + subreport.detail;
            return r;
          }
        }
      }
    }
  }
  r.pass = true;
  r.detail = "all fibers at positions 1 and " + std::to_string(n) + " have size " +
             std::to_string(expect) + " and stay balanced after puncturing";
  return r;
}

StructureReport check_unique_codeword_structure(const Code& c, int t) {
  const int n = c.degree();
  if (n > 8) throw std::invalid_argument("unique-codeword check guarded at n <= 8");
  StructureReport r;
  const BalanceVerdict v = check_balanced(c, t);
  if (!v.is_balanced) {
    r.detail = "code is not " + std::to_string(t) + "-balanced: " + v.detail;
    return r;
  }
  // For each window, the restriction map must be injective; since the
  // number of injective assignments equals |C|, injectivity makes it a
  // bijection onto all of them.
  for (int s = 0; s <= n - t; ++s) {
    std::vector<int> positions;
    for (int j = 1; j <= s; ++j) positions.push_back(j);
    for (int j = t + s + 1; j <= n; ++j) positions.push_back(j);
    std::map<std::vector<int>, int> counts;
    for (const auto& w : c.words()) {
      std::vector<int> key;
      key.reserve(positions.size());
      for (int p : positions) key.push_back(w(p));
      if (++counts[key] > 1) {
        std::ostringstream out;
        out << "window s=" << s << " positions {";
        for (size_t k = 0; k < positions.size(); ++k) out << (k ? "," : "") << positions[k];
        out << "} matched by more than one codeword (values";
        for (int x : key) out << ' ' << x;
        out << ")";
        r.detail = out.str();
        return r;
      }
    }
  }
  r.pass = true;
  r.detail = "each of the " + std::to_string(n - t + 1) +
             " position windows determines every codeword uniquely";
  return r;
}

std::optional<Permutation> is_coset_of_alternating(const Code& c) {
  const int n = c.degree();
  if (static_cast<long long>(c.size()) * 2 != factorial_ll(n))
    throw std::invalid_argument("coset test requires |C| = n!/2");
  const Parity p0 = parity(c.words().front());
  for (const auto& w : c.words())
    if (parity(w) != p0) return std::nullopt;
  // A constant-parity half of S_n is exactly one translate of A_n.
  if (p0 == Parity::even) return Permutation::identity(n);
  return c.words().front();
}

}  // namespace ktc

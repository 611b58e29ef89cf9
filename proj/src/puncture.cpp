#include "ktc/puncture.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ktc {

PunctureSet::PunctureSet(int degree_in, std::vector<int> kept_in)
    : degree(degree_in), kept(std::move(kept_in)) {
  if (kept.empty()) throw std::invalid_argument("puncture set must be nonempty");
  std::sort(kept.begin(), kept.end());
  for (size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 1 || kept[i] > degree)
      throw std::invalid_argument("puncture set position out of range");
    if (i > 0 && kept[i] == kept[i - 1])
      throw std::invalid_argument("duplicate position in puncture set");
  }
}

PunctureSet PunctureSet::parse(int degree, const std::string& text) {
  std::vector<int> positions;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("invalid puncture set text: " + text);
    positions.push_back(v);
  }
  if (positions.empty()) throw std::invalid_argument("empty puncture set text");
  return PunctureSet(degree, std::move(positions));
}

PunctureSet PunctureSet::full(int degree) {
  std::vector<int> all(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) all[static_cast<size_t>(i)] = i + 1;
  return PunctureSet(degree, std::move(all));
}

PunctureSet PunctureSet::complement_of(int degree, int i) {
  if (i < 1 || i > degree) throw std::invalid_argument("position out of range");
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(degree) - 1);
  for (int j = 1; j <= degree; ++j)
    if (j != i) rest.push_back(j);
  return PunctureSet(degree, std::move(rest));
}

Permutation puncture(const Permutation& a, const PunctureSet& s) {
  if (s.degree != a.degree()) throw std::invalid_argument("puncture: degree mismatch");
  const int m = s.size();
  std::vector<int> values(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) values[static_cast<size_t>(k)] = a(s.kept[static_cast<size_t>(k)]);
  // Replace each kept value by its rank among the kept values.
  std::vector<int> order(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) order[static_cast<size_t>(k)] = k;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return values[static_cast<size_t>(x)] < values[static_cast<size_t>(y)]; });
  std::vector<int> out(static_cast<size_t>(m));
  for (int rank = 0; rank < m; ++rank) out[static_cast<size_t>(order[static_cast<size_t>(rank)])] = rank + 1;
  return Permutation(std::move(out));
}

int psi(int i, int j) {
  if (j == i) throw std::invalid_argument("psi is undefined at j = i");
  return j < i ? j : j - 1;
}

FilteredInversions filtered_inversions(const Permutation& a, int i) {
  const int n = a.degree();
  if (i < 1 || i > n) throw std::invalid_argument("filtered_inversions: value out of range");
  const InversionSet full = inversion_set(a);
  FilteredInversions out;
  out.below.degree = out.above.degree = out.at.degree = out.rest.degree = n;
  for (const auto& p : full.pairs) {
    if (p.first == i) {
      out.below.pairs.insert(p);
      out.at.pairs.insert(p);
    } else if (p.second == i) {
      out.above.pairs.insert(p);
      out.at.pairs.insert(p);
    } else {
      out.rest.pairs.insert(p);
    }
  }
  return out;
}

}  // namespace ktc

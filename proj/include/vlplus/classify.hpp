#pragma once

// Classification layer: even overlattices obtained by gluing totally
// singular subspaces of the discriminant form, orbit censuses of totally
// singular subspaces of the ten-dimensional label space, and the small
// amalgam indices over F2.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "f2.hpp"
#include "lattice.hpp"
#include "qspace.hpp"

namespace vlplus::cls {

using exact::QMat;
using exact::Rat;
using lat::Lattice;

// All even overlattices M with L <= M <= L* and [M : L] = 2^j. They
// correspond to the totally singular dimension-j subspaces of the
// discriminant form.
inline std::vector<Lattice> even_overlattices(const Lattice& l, int j) {
  qspace::DiscForm disc = qspace::discriminant_form(l);
  auto subs = qspace::totally_singular_subspaces(disc.space, j);
  std::vector<Lattice> out;
  out.reserve(subs.size());
  for (const auto& s : subs) {
    QMat rows = l.basis();
    for (f2::Word b : s.basis) rows.push_back(disc.rep[b]);
    Lattice m(l.frame(), rows);
    if (!lat::is_even(m))
      throw std::logic_error("even_overlattices: glued lattice is not even");
    out.push_back(std::move(m));
  }
  return out;
}

// Determinant and norm-2 root system, printed as a sortable key.
inline std::string fingerprint(const Lattice& m) {
  std::string key = "det=";
  key += numerator(m.det()).str();
  if (denominator(m.det()) != 1) key += "/" + denominator(m.det()).str();
  for (const auto& c : lat::root_components(m, 2)) key += "|" + c.type;
  return key;
}

inline std::map<std::string, std::size_t> fingerprint_classes(
    const std::vector<Lattice>& ms) {
  std::map<std::string, std::size_t> out;
  for (const auto& m : ms) ++out[fingerprint(m)];
  return out;
}

struct CensusRow {
  int dim = 0;
  std::size_t subspaces = 0;
  std::vector<std::size_t> orbit_sizes;  // sorted
};

struct Census {
  std::vector<CensusRow> rows;  // dims 0..max_dim
  std::size_t total_orbits = 0;
};

namespace detail {

// Canonical reduced echelon basis, packed into one 64-bit key (up to five
// rows of at most twelve bits).
inline std::uint64_t packed_key(std::array<f2::Word, 5>& v, int k, int n) {
  int r = 0;
  for (int bit = 0; bit < n && r < k; ++bit) {
    int p = -1;
    for (int i = r; i < k; ++i)
      if ((v[i] >> bit) & 1) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(v[r], v[p]);
    for (int i = 0; i < k; ++i)
      if (i != r && ((v[i] >> bit) & 1)) v[i] ^= v[r];
    ++r;
  }
  std::uint64_t key = 0;
  for (int i = 0; i < k; ++i) key |= std::uint64_t(v[i]) << (12 * i);
  return key;
}

}  // namespace detail

// Orbits of totally singular subspaces of each dimension under the given
// generators.
inline Census extension_census(const qspace::QuadSpace& s,
                               const std::vector<f2::Matrix>& gens,
                               int max_dim) {
  if (s.n > 12 || max_dim > 5)
    throw std::invalid_argument("extension_census: space too large");
  Census out;
  for (int d = 0; d <= max_dim; ++d) {
    auto subs = qspace::totally_singular_subspaces(s, d);
    std::vector<std::array<f2::Word, 5>> basis(subs.size());
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(2 * subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      basis[i].fill(0);
      for (int j = 0; j < d; ++j) basis[i][j] = subs[i].basis[j];
      std::array<f2::Word, 5> tmp = basis[i];
      index.emplace(detail::packed_key(tmp, d, s.n), i);
    }
    CensusRow row{d, subs.size(), {}};
    std::vector<char> seen(subs.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < subs.size(); ++seed) {
      if (seen[seed]) continue;
      seen[seed] = 1;
      stack.assign(1, seed);
      std::size_t count = 0;
      while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& g : gens) {
          std::array<f2::Word, 5> img{};
          for (int j = 0; j < d; ++j) {
            f2::Word w = basis[cur][j], im = 0;
            while (w) {
              int b = __builtin_ctzll(w);
              w &= w - 1;
              im ^= g.row[b];
            }
            img[j] = im;
          }
          auto it = index.find(detail::packed_key(img, d, s.n));
          if (it == index.end())
            throw std::logic_error("extension_census: image left the family");
          if (!seen[it->second]) {
            seen[it->second] = 1;
            stack.push_back(it->second);
          }
        }
      }
      row.orbit_sizes.push_back(count);
    }
    std::sort(row.orbit_sizes.begin(), row.orbit_sizes.end());
    out.total_orbits += row.orbit_sizes.size();
    out.rows.push_back(std::move(row));
  }
  return out;
}

// --- Amalgam indices over F2 ----------------------------------------------

namespace detail {

inline std::vector<f2::Matrix> general_linear_group(int n) {
  std::vector<f2::Matrix> out;
  std::size_t cells = std::size_t(1) << (n * n);
  for (std::size_t bits = 0; bits < cells; ++bits) {
    f2::Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((bits >> (i * n + j)) & 1) m.set(i, j, 1);
    if (f2::rank(m) == n) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

// Indices of the stabilizers of a line in GL(2), and of a line, a plane and
// a full flag in GL(3), computed as orbit sizes.
inline std::vector<std::size_t> amalgam_indices() {
  auto orbit_size = [](const std::vector<f2::Matrix>& group,
                       const std::vector<f2::Subspace>& flag) {
    std::vector<std::string> seen;
    for (const auto& g : group) {
      std::string key;
      for (const auto& s : flag)
        key += f2::canonical_key(qspace::apply_to_subspace(g, s));
      seen.push_back(std::move(key));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size();
  };
  auto gl2 = detail::general_linear_group(2);
  auto gl3 = detail::general_linear_group(3);
  f2::Subspace line2 = f2::Subspace::span(2, {1});
  f2::Subspace line3 = f2::Subspace::span(3, {1});
  f2::Subspace plane3 = f2::Subspace::span(3, {1, 2});
  return {orbit_size(gl2, {line2}), orbit_size(gl3, {line3}),
          orbit_size(gl3, {plane3}), orbit_size(gl3, {line3, plane3})};
}

}  // namespace vlplus::cls

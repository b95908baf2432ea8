#include "syzstab/exterior.hpp"

#include "syzstab/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace syzstab {

namespace {

void validate_sorted_tuple(const IndexTuple& t, int m, int r) {
  if (static_cast<int>(t.size()) != r) {
    throw std::invalid_argument("index tuple has wrong length");
  }
  int prev = 0;
  for (int i : t) {
    if (i <= prev || i > m) {
      throw std::invalid_argument("index tuple must be strictly increasing in 1..m");
    }
    prev = i;
  }
}

/// Sorts indices in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(IndexTuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1]) return 0;
  }
  return sign;
}

}  // namespace

ExteriorElement::ExteriorElement(int m, int r) : m_(m), r_(r) {
  if (m < 1) throw std::invalid_argument("exterior element needs m >= 1");
  if (r < 0) throw std::invalid_argument("exterior degree must be >= 0");
}

ExteriorElement ExteriorElement::wedge_monomial(int m, IndexTuple indices,
                                                const Rational& coeff) {
  ExteriorElement e(m, static_cast<int>(indices.size()));
  validate_sorted_tuple(indices, m, e.r_);
  if (coeff != 0) e.terms_.emplace(std::move(indices), coeff);
  return e;
}

ExteriorElement ExteriorElement::one(int m) {
  ExteriorElement e(m, 0);
  e.terms_.emplace(IndexTuple{}, Rational(1));
  return e;
}

Rational ExteriorElement::coeff(const IndexTuple& sorted_indices) const {
  auto it = terms_.find(sorted_indices);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExteriorElement::coeff_signed(IndexTuple indices) const {
  const int sign = sort_sign(indices);
  if (sign == 0) return 0;
  return sign * coeff(indices);
}

void ExteriorElement::add_term(const IndexTuple& sorted_indices, const Rational& c) {
  validate_sorted_tuple(sorted_indices, m_, r_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(sorted_indices, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<IndexTuple> ExteriorElement::support() const {
  std::vector<IndexTuple> keys;
  keys.reserve(terms_.size());
  for (const auto& [k, c] : terms_) keys.push_back(k);
  return keys;
}

ExteriorElement ExteriorElement::operator*(const Rational& c) const {
  ExteriorElement out(m_, r_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& other) const {
  if (m_ != other.m_ || r_ != other.r_) {
    throw std::invalid_argument("exterior sum of mismatched shapes");
  }
  ExteriorElement out = *this;
  for (const auto& [k, v] : other.terms_) out.add_term(k, v);
  return out;
}

ExteriorElement koszul_delta(const ExteriorElement& w) {
  if (w.r() < 1) throw std::domain_error("koszul_delta needs degree >= 1");
  ExteriorElement out(w.m(), w.r() - 1);
  for (const auto& [key, c] : w.terms()) {
    for (size_t p = 0; p < key.size(); ++p) {
      IndexTuple reduced;
      reduced.reserve(key.size() - 1);
      for (size_t q = 0; q < key.size(); ++q) {
        if (q != p) reduced.push_back(key[q]);
      }
      out.add_term(reduced, (p % 2 == 0) ? c : -c);
    }
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.m() != b.m()) {
    throw std::invalid_argument("wedge of elements over different spaces");
  }
  ExteriorElement out(a.m(), a.r() + b.r());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // sign = parity of inversions between the two sorted blocks
      int inversions = 0;
      bool disjoint = true;
      for (int ib : kb) {
        for (int ia : ka) {
          if (ia == ib) {
            disjoint = false;
            break;
          }
          if (ia > ib) ++inversions;
        }
        if (!disjoint) break;
      }
      if (!disjoint) continue;
      IndexTuple merged;
      merged.reserve(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(),
                 std::back_inserter(merged));
      const Rational prod = ca * cb;
      out.add_term(merged, inversions % 2 == 0 ? prod : Rational(-prod));
    }
  }
  return out;
}

ExteriorElement wedge_vector(const ExteriorElement& a,
                             const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != a.m()) {
    throw std::invalid_argument("vector length does not match the space");
  }
  ExteriorElement out(a.m(), a.r() + 1);
  for (const auto& [key, c] : a.terms()) {
    for (int j = 1; j <= a.m(); ++j) {
      const Rational& vj = v[static_cast<size_t>(j - 1)];
      if (vj == 0) continue;
      int swaps = 0;
      bool repeated = false;
      for (int i : key) {
        if (i == j) {
          repeated = true;
          break;
        }
        if (i > j) ++swaps;
      }
      if (repeated) continue;
      IndexTuple merged = key;
      merged.insert(std::upper_bound(merged.begin(), merged.end(), j), j);
      const Rational prod = c * vj;
      out.add_term(merged, swaps % 2 == 0 ? prod : Rational(-prod));
    }
  }
  return out;
}

ExteriorElement wedge_of_vectors(int m,
                                 const std::vector<std::vector<Rational>>& vs) {
  ExteriorElement acc = ExteriorElement::one(m);
  for (const std::vector<Rational>& v : vs) acc = wedge_vector(acc, v);
  return acc;
}

bool is_decomposable(const ExteriorElement& w) {
  if (w.is_zero()) throw std::domain_error("is_decomposable: zero element");
  const int r = w.r();
  if (r <= 1) return true;
  const int m = w.m();

  // Only relations whose index data overlaps the support can have a nonzero
  // term: the (r-1)-tuple must be a support key minus one index, the
  // (r+1)-tuple a support key plus one index.
  std::set<IndexTuple> left_tuples;
  std::set<IndexTuple> right_tuples;
  for (const auto& [key, c] : w.terms()) {
    for (size_t p = 0; p < key.size(); ++p) {
      IndexTuple shorter;
      for (size_t q = 0; q < key.size(); ++q) {
        if (q != p) shorter.push_back(key[q]);
      }
      left_tuples.insert(std::move(shorter));
    }
    for (int extra = 1; extra <= m; ++extra) {
      if (std::binary_search(key.begin(), key.end(), extra)) continue;
      IndexTuple longer = key;
      longer.insert(std::upper_bound(longer.begin(), longer.end(), extra), extra);
      right_tuples.insert(std::move(longer));
    }
  }

  for (const IndexTuple& left : left_tuples) {
    for (const IndexTuple& right : right_tuples) {
      Rational acc = 0;
      for (size_t p = 0; p < right.size(); ++p) {
        IndexTuple with_jp = left;
        with_jp.push_back(right[p]);
        const Rational c1 = w.coeff_signed(std::move(with_jp));
        if (c1 == 0) continue;
        IndexTuple without_jp;
        for (size_t q = 0; q < right.size(); ++q) {
          if (q != p) without_jp.push_back(right[q]);
        }
        const Rational c2 = w.coeff(without_jp);
        if (c2 == 0) continue;
        const Rational prod = c1 * c2;
        acc += (p % 2 == 0) ? prod : Rational(-prod);
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rational>> recover_factors(const ExteriorElement& w) {
  if (!is_decomposable(w)) {
    throw std::domain_error("recover_factors: element is not decomposable");
  }
  const int m = w.m();
  const int r = w.r();
  if (r == 0) return {};

  std::set<IndexTuple> duals;
  for (const auto& [key, c] : w.terms()) {
    for (size_t p = 0; p < key.size(); ++p) {
      IndexTuple shorter;
      for (size_t q = 0; q < key.size(); ++q) {
        if (q != p) shorter.push_back(key[q]);
      }
      duals.insert(std::move(shorter));
    }
  }

  RationalMatrix rows;
  for (const IndexTuple& k : duals) {
    RationalVector row(static_cast<size_t>(m), 0);
    for (int j = 1; j <= m; ++j) {
      IndexTuple full;
      full.reserve(k.size() + 1);
      full.push_back(j);
      full.insert(full.end(), k.begin(), k.end());
      row[static_cast<size_t>(j - 1)] = w.coeff_signed(std::move(full));
    }
    rows.push_back(std::move(row));
  }
  rref(rows);
  if (static_cast<int>(rows.size()) != r) {
    throw std::logic_error("contraction span of a decomposable element must "
                           "have dimension r");
  }
  return rows;
}

IndexFamilies extract_index_families(const ExteriorElement& w) {
  if (w.is_zero()) throw std::domain_error("extract_index_families: zero element");
  if (!koszul_delta(w).is_zero()) {
    throw std::domain_error(
        "extract_index_families: element is not in the kernel of the Koszul "
        "differential");
  }
  const std::vector<std::vector<Rational>> factors = recover_factors(w);

  // The reduced echelon basis has the shape e_{i_p} + (entries at non-pivot
  // columns past i_p); the least such nonzero column joins the family of
  // pivot p. Coordinate sums vanish because the element is delta-closed.
  const int m = w.m();
  std::map<int, std::vector<int>> groups;  // least column -> pivots drawn to it
  for (const std::vector<Rational>& row : factors) {
    int pivot = -1;
    for (int j = 0; j < m; ++j) {
      if (row[static_cast<size_t>(j)] != 0) {
        pivot = j;
        break;
      }
    }
    Rational sum = 0;
    for (const Rational& x : row) sum += x;
    if (pivot < 0 || sum != 0) {
      throw std::logic_error("echelon factor of a delta-closed element must "
                             "have zero coordinate sum");
    }
    int least = -1;
    for (int j = pivot + 1; j < m; ++j) {
      if (row[static_cast<size_t>(j)] != 0) {
        least = j;
        break;
      }
    }
    if (least < 0) {
      throw std::logic_error("echelon factor has no off-pivot entry");
    }
    groups[least + 1].push_back(pivot + 1);
  }

  IndexFamilies out;
  for (auto& [anchor, pivots] : groups) {
    std::vector<int> family = std::move(pivots);
    family.push_back(anchor);
    std::sort(family.begin(), family.end());
    out.families.push_back(std::move(family));
  }
  std::sort(out.families.begin(), out.families.end());
  return out;
}

}  // namespace syzstab

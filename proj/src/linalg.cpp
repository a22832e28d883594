#include "xorloops/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "xorloops/errors.hpp"

namespace xorloops {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonInvolution: return "NonInvolution";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OddEulerDefect: return "OddEulerDefect";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::NotADisc: return "NotADisc";
    case ErrorCode::SameSide: return "SameSide";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NotNullHomologous: return "NotNullHomologous";
    case ErrorCode::InvalidLocalConfig: return "InvalidLocalConfig";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::SignSystemInfeasible: return "SignSystemInfeasible";
    case ErrorCode::SingularSignTable: return "SingularSignTable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::IrrationalWeight: return "IrrationalWeight";
    case ErrorCode::NoCoordinates: return "NoCoordinates";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void size_guard(const char* what, std::size_t value, std::size_t bound) {
  if (value > bound) {
    std::ostringstream os;
    os << what << " is " << value << ", above the enumeration bound " << bound;
    throw Error(ErrorCode::SizeGuard, os.str());
  }
}

// --- EdgeSet ---------------------------------------------------------------

EdgeSet EdgeSet::from_indices(std::size_t size, const std::vector<int>& indices) {
  EdgeSet s(size);
  for (int i : indices) s.flip(static_cast<std::size_t>(i));
  return s;
}

EdgeSet EdgeSet::operator~() const {
  EdgeSet r(size_);
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
  if (size_ & 63) r.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  return r;
}

int EdgeSet::lowest() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
  return -1;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::string EdgeSet::hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t nibbles = std::max<std::size_t>(1, (size_ + 3) / 4);
  std::string s(nibbles, '0');
  for (std::size_t n = 0; n < nibbles; ++n) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = n * 4 + b;
      if (i < size_ && test(i)) v |= 1u << b;
    }
    s[nibbles - 1 - n] = digits[v];
  }
  return s;
}

EdgeSet EdgeSet::from_hex(std::size_t size, const std::string& hex) {
  EdgeSet s(size);
  std::size_t n = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++n) {
    const char c = static_cast<char>(std::tolower(*it));
    unsigned v;
    if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
    else throw Error(ErrorCode::BadSpec, "invalid hex digit in '" + hex + "'");
    for (std::size_t b = 0; b < 4; ++b) {
      if (!(v >> b & 1u)) continue;
      const std::size_t i = n * 4 + b;
      if (i >= size) throw Error(ErrorCode::BadSpec, "hex mask '" + hex + "' exceeds size");
      s.set(i);
    }
  }
  return s;
}

// --- Z/2 elimination -------------------------------------------------------

bool Z2Echelon::insert(const EdgeSet& v) {
  const bool track = capacity_ > 0;
  if (track && inserted_ == capacity_) throw Error(ErrorCode::OutOfRange, "echelon capacity exceeded");
  EdgeSet value = v;
  EdgeSet combo(capacity_);
  if (track) combo.set(inserted_);
  ++inserted_;
  for (const Row& r : rows_) {
    if (value.test(static_cast<std::size_t>(r.pivot))) {
      value ^= r.value;
      if (track) combo ^= r.combo;
    }
  }
  const int pivot = value.lowest();
  if (pivot < 0) return false;
  // Keep earlier rows reduced on the new pivot.
  for (Row& r : rows_) {
    if (r.value.test(static_cast<std::size_t>(pivot))) {
      r.value ^= value;
      if (track) r.combo ^= combo;
    }
  }
  rows_.push_back({pivot, std::move(value), std::move(combo)});
  return true;
}

EdgeSet Z2Echelon::reduce(EdgeSet v) const {
  for (const Row& r : rows_)
    if (v.test(static_cast<std::size_t>(r.pivot))) v ^= r.value;
  return v;
}

std::optional<EdgeSet> Z2Echelon::combination(const EdgeSet& v) const {
  if (capacity_ == 0) throw Error(ErrorCode::OutOfRange, "echelon does not track combinations");
  EdgeSet value = v;
  EdgeSet combo(capacity_);
  for (const Row& r : rows_) {
    if (value.test(static_cast<std::size_t>(r.pivot))) {
      value ^= r.value;
      combo ^= r.combo;
    }
  }
  if (!value.empty()) return std::nullopt;
  return combo;
}

std::vector<EdgeSet> z2_nullspace(const std::vector<EdgeSet>& rows, std::size_t dim) {
  // Row-reduce, then read off one basis vector per free column.
  std::vector<EdgeSet> reduced;
  std::vector<int> pivots;
  for (const EdgeSet& row : rows) {
    EdgeSet v = row;
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (v.test(static_cast<std::size_t>(pivots[k]))) v ^= reduced[k];
    const int p = v.lowest();
    if (p < 0) continue;
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (reduced[k].test(static_cast<std::size_t>(p))) reduced[k] ^= v;
    reduced.push_back(v);
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<EdgeSet> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    EdgeSet v(dim);
    v.set(free);
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (reduced[k].test(free)) v.set(static_cast<std::size_t>(pivots[k]));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<EdgeSet> z2_solve(const std::vector<EdgeSet>& rows, const std::vector<bool>& rhs,
                                std::size_t dim) {
  std::vector<EdgeSet> reduced;
  std::vector<bool> value;
  std::vector<int> pivots;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EdgeSet v = rows[k];
    bool b = rhs[k];
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (v.test(static_cast<std::size_t>(pivots[r]))) {
        v ^= reduced[r];
        b = b != value[r];
      }
    }
    const int p = v.lowest();
    if (p < 0) {
      if (b) return std::nullopt;
      continue;
    }
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (reduced[r].test(static_cast<std::size_t>(p))) {
        reduced[r] ^= v;
        value[r] = value[r] != b;
      }
    }
    reduced.push_back(v);
    value.push_back(b);
    pivots.push_back(p);
  }
  EdgeSet x(dim);
  for (std::size_t r = 0; r < reduced.size(); ++r)
    if (value[r]) x.set(static_cast<std::size_t>(pivots[r]));
  return x;
}

std::optional<std::vector<EdgeSet>> z2_inverse(const std::vector<EdgeSet>& rows) {
  const std::size_t n = rows.size();
  std::vector<EdgeSet> a = rows, inv;
  for (std::size_t i = 0; i < n; ++i) {
    EdgeSet e(n);
    e.set(i);
    inv.push_back(e);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a[p].test(c)) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a[r].test(c)) {
        a[r] ^= a[c];
        inv[r] ^= inv[c];
      }
    }
  }
  return inv;
}

int permutation_sign(const std::vector<int>& image) {
  std::vector<bool> seen(image.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(image[i])) {
      seen[i] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace xorloops

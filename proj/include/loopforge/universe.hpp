#pragma once

#include "loopforge/rational.hpp"

namespace loopforge {

enum class UniverseKind { Plain, Doubled, DoubledPlusOne };

// Index set at truncation rank n.  Plain(n) = {1..n}.  Doubled(n) = {1..2n}
// with the block convention (1..n | n+1..2n), index i paired with n+i.
// DoubledPlusOne(n) adds the extra index 2n+1, fixed by the pairing.
struct IndexUniverse {
  UniverseKind kind = UniverseKind::Plain;
  int rank = 0;  // rank 0 acts as a wildcard (zero objects in containers)

  int size() const {
    switch (kind) {
      case UniverseKind::Plain:
        return rank;
      case UniverseKind::Doubled:
        return 2 * rank;
      case UniverseKind::DoubledPlusOne:
        return 2 * rank + 1;
    }
    return 0;
  }
  bool contains(int i) const { return i >= 1 && i <= size(); }

  // The pairing i <-> n+i on doubled universes; the extra index is fixed.
  int pair_of(int i) const {
    if (kind == UniverseKind::Plain) return i;
    if (i <= rank) return rank + i;
    if (i <= 2 * rank) return i - rank;
    return i;
  }

  bool unset() const { return rank == 0; }
  friend bool operator==(const IndexUniverse& a, const IndexUniverse& b) {
    return a.kind == b.kind && a.rank == b.rank;
  }
};

inline IndexUniverse plain(int n) { return {UniverseKind::Plain, n}; }
inline IndexUniverse doubled(int n) { return {UniverseKind::Doubled, n}; }
inline IndexUniverse doubled_plus_one(int n) {
  return {UniverseKind::DoubledPlusOne, n};
}

// Merge the universes of two operands; zero objects are compatible with
// anything.
inline IndexUniverse join_universe(const IndexUniverse& a,
                                   const IndexUniverse& b,
                                   const char* what) {
  if (a.unset()) return b;
  if (b.unset()) return a;
  if (!(a == b)) throw UniverseMismatch(what);
  return a;
}

}  // namespace loopforge

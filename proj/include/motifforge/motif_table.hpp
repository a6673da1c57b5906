#pragma once

#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "motifforge/canonical.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/isomorphism.hpp"

namespace motifforge {

// Graphs above this size skip the exact-isomorphism confirmation of WL
// key groups and trust the digest.
constexpr std::size_t kIsoConfirmLimit = 20;

inline std::string format_count(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

/// Accumulates motif occurrences grouped by canonical key, with optional
/// per-anchor-orbit counts. Digest groups are confirmed with
/// exact_isomorphic for graphs <= kIsoConfirmLimit nodes, so WL
/// collisions split into distinct entries.
class MotifTable {
 public:
  struct Orbit {
    CanonicalKey key;                         // anchored canonical key
    NodeId repr_anchor = 0;                   // anchor within the entry representative
    double count = 0;                         // miner-specific metric
    std::unordered_set<NodeId> distinct;      // Definition-1 anchor witnesses
  };

  struct Entry {
    Graph representative;                     // unanchored
    CanonicalKey key;
    double count = 0;                         // subsets / samples / leaves
    double weight = 0;                        // estimate metric
    std::vector<Orbit> orbits;
  };

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

  /// Entry for an unanchored graph, created on first sight.
  Entry& entry_for(const Graph& g) {
    Graph plain = g.has_anchor() ? g.without_anchor() : g;
    CanonicalKey key = canonical_key(plain);
    auto& bucket = by_digest_[key.digest];
    for (std::size_t idx : bucket) {
      if (plain.node_count() > kIsoConfirmLimit ||
          exact_isomorphic(entries_[idx].representative, plain))
        return entries_[idx];
    }
    bucket.push_back(entries_.size());
    entries_.push_back(Entry{std::move(plain), key, 0, 0, {}});
    return entries_.back();
  }

  /// Orbit of `entry` matching `anchored` (entry's graph with some
  /// anchor); created on first sight with a representative anchor.
  Orbit& orbit_for(Entry& entry, const Graph& anchored) {
    CanonicalKey key = canonical_key(anchored);
    for (Orbit& o : entry.orbits) {
      if (o.key != key) continue;
      if (anchored.node_count() > kIsoConfirmLimit ||
          exact_isomorphic(entry.representative.with_anchor(o.repr_anchor),
                           anchored))
        return o;
    }
    NodeId repr_anchor = kNoNode;
    for (NodeId j = 0; j < entry.representative.node_count(); ++j) {
      Graph candidate = entry.representative.with_anchor(j);
      if (canonical_key(candidate) == key &&
          (anchored.node_count() > kIsoConfirmLimit ||
           exact_isomorphic(candidate, anchored))) {
        repr_anchor = j;
        break;
      }
    }
    entry.orbits.push_back(Orbit{key, repr_anchor, 0, {}});
    return entry.orbits.back();
  }

  /// Copies Definition-1 distinct-witness sizes into orbit counts.
  void finalize_distinct() {
    for (Entry& e : entries_)
      for (Orbit& o : e.orbits)
        if (!o.distinct.empty()) o.count = static_cast<double>(o.distinct.size());
  }

  static double max_orbit_count(const Entry& e) {
    double best = 0;
    for (const Orbit& o : e.orbits) best = std::max(best, o.count);
    return best;
  }

  /// Entries ranked by `metric` descending, ties by digest ascending.
  template <typename Metric>
  std::vector<const Entry*> ranked(Metric&& metric) const {
    std::vector<const Entry*> out;
    for (const Entry& e : entries_) out.push_back(&e);
    std::sort(out.begin(), out.end(), [&](const Entry* a, const Entry* b) {
      double ma = metric(*a), mb = metric(*b);
      if (ma != mb) return ma > mb;
      return a->key.digest < b->key.digest;
    });
    return out;
  }

  struct RankedAnchored {
    CanonicalKey key;
    const Entry* entry;
    NodeId repr_anchor;
    double count;
  };

  /// All anchored orbits ranked by count descending.
  std::vector<RankedAnchored> ranked_anchored() const {
    std::vector<RankedAnchored> out;
    for (const Entry& e : entries_)
      for (const Orbit& o : e.orbits)
        out.push_back({o.key, &e, o.repr_anchor, o.count});
    std::sort(out.begin(), out.end(),
              [](const RankedAnchored& a, const RankedAnchored& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.key.digest < b.key.digest;
              });
    return out;
  }

  /// CSV: canonical_key,size,count,weight,anchored_counts(json).
  /// Digest collisions get a -<i> suffix on the key.
  void write_csv(std::ostream& out) const {
    out << "canonical_key,size,count,weight,anchored_counts\n";
    std::map<std::uint64_t, int> seen;
    for (const Entry& e : entries_) {
      int dup = seen[e.key.digest]++;
      char keybuf[32];
      std::snprintf(keybuf, sizeof(keybuf), "%016llx",
                    static_cast<unsigned long long>(e.key.digest));
      out << keybuf;
      if (dup > 0) out << "-" << dup;
      out << "," << e.representative.node_count() << "," << format_count(e.count)
          << "," << format_count(e.weight) << ",\"{";
      bool first = true;
      // Orbits sorted by representative anchor for stable output.
      std::vector<const Orbit*> orbits;
      for (const Orbit& o : e.orbits) orbits.push_back(&o);
      std::sort(orbits.begin(), orbits.end(),
                [](const Orbit* a, const Orbit* b) {
                  return a->repr_anchor < b->repr_anchor;
                });
      for (const Orbit* o : orbits) {
        if (!first) out << ",";
        first = false;
        out << "\"\"" << o->repr_anchor << "\"\":" << format_count(o->count);
      }
      out << "}\"\n";
    }
  }

 private:
  std::vector<Entry> entries_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_digest_;
};

}  // namespace motifforge

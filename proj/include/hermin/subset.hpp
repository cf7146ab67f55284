#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hermin {

/// The ground set: elements are dense indices 0..n-1; labels are cosmetic
/// display names (distinct when present).
class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Display name of element i: its label, or the decimal index.
  std::string label(int i) const;

  /// Inverse of label(); understands decimal indices for unlabeled sets.
  std::optional<int> index_of(const std::string& name) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

/// A subset of a ground set, stored as a bitmask over 64-bit words so that
/// universes beyond 64 elements work transparently.
class Subset {
 public:
  Subset() : n_(0) {}
  static Subset empty(int universe_size);
  static Subset full(int universe_size);
  static Subset singleton(int universe_size, int element);
  static Subset of(int universe_size, std::initializer_list<int> elements);
  /// Low 64 bits as element indicators; universe_size must be <= 64.
  static Subset from_mask(int universe_size, std::uint64_t mask);

  int universe_size() const { return n_; }
  bool test(int i) const;
  void set(int i);
  void reset(int i);

  int count() const;
  bool none() const;
  bool is_full() const { return count() == n_; }

  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset operator-(const Subset& o) const;
  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);
  Subset complemented() const;

  bool contains_all(const Subset& other) const;  // other is a subset of *this
  bool intersects(const Subset& o) const;
  bool disjoint_from(const Subset& o) const { return !intersects(o); }

  std::vector<int> elements() const;
  std::uint64_t to_mask() const;  // universe_size must be <= 64

  bool operator==(const Subset& o) const = default;
  std::strong_ordering operator<=>(const Subset& o) const;

  struct Hash {
    std::size_t operator()(const Subset& s) const;
  };

  /// "{a, c}" using the ground set's labels.
  std::string str(const GroundSet& universe) const;

 private:
  explicit Subset(int n);

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace hermin

#include "hermin/subset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "hermin/check.hpp"

namespace hermin {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set must have at least one element");
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("ground set must have at least one element");
  if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match ground set size");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n) {
    throw std::invalid_argument("ground set labels must be distinct");
  }
}

std::string GroundSet::label(int i) const {
  HERMIN_ASSERT(i >= 0 && i < n_);
  if (!labels_.empty()) return labels_[i];
  return std::to_string(i);
}

std::optional<int> GroundSet::index_of(const std::string& name) const {
  if (!labels_.empty()) {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }
  try {
    std::size_t pos = 0;
    int idx = std::stoi(name, &pos);
    if (pos != name.size() || idx < 0 || idx >= n_) return std::nullopt;
    return idx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

Subset::Subset(int n) : n_(n), words_(word_count(n), 0) { HERMIN_ASSERT(n >= 1); }

Subset Subset::empty(int universe_size) { return Subset(universe_size); }

Subset Subset::full(int universe_size) {
  Subset s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  int tail = universe_size % kWordBits;
  if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

Subset Subset::singleton(int universe_size, int element) {
  Subset s(universe_size);
  s.set(element);
  return s;
}

Subset Subset::of(int universe_size, std::initializer_list<int> elements) {
  Subset s(universe_size);
  for (int e : elements) s.set(e);
  return s;
}

Subset Subset::from_mask(int universe_size, std::uint64_t mask) {
  HERMIN_ASSERT(universe_size <= kWordBits);
  HERMIN_ASSERT(universe_size == kWordBits || (mask >> universe_size) == 0);
  Subset s(universe_size);
  s.words_[0] = mask;
  return s;
}

bool Subset::test(int i) const {
  HERMIN_ASSERT(i >= 0 && i < n_);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Subset::set(int i) {
  HERMIN_ASSERT(i >= 0 && i < n_);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void Subset::reset(int i) {
  HERMIN_ASSERT(i >= 0 && i < n_);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

int Subset::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Subset::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Subset Subset::operator|(const Subset& o) const {
  Subset r = *this;
  r |= o;
  return r;
}

Subset Subset::operator&(const Subset& o) const {
  Subset r = *this;
  r &= o;
  return r;
}

Subset Subset::operator-(const Subset& o) const {
  Subset r = *this;
  r -= o;
  return r;
}

Subset& Subset::operator|=(const Subset& o) {
  HERMIN_ASSERT(n_ == o.n_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  HERMIN_ASSERT(n_ == o.n_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  HERMIN_ASSERT(n_ == o.n_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Subset Subset::complemented() const {
  Subset r = full(n_);
  r -= *this;
  return r;
}

bool Subset::contains_all(const Subset& other) const {
  HERMIN_ASSERT(n_ == other.n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((other.words_[i] & ~words_[i]) != 0) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& o) const {
  HERMIN_ASSERT(n_ == o.n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(wi) * kWordBits + bit);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t Subset::to_mask() const {
  HERMIN_ASSERT(n_ <= kWordBits);
  return words_[0];
}

std::strong_ordering Subset::operator<=>(const Subset& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::Hash::operator()(const Subset& s) const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(s.n_);
  for (auto w : s.words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Subset::str(const GroundSet& universe) const {
  HERMIN_ASSERT(universe.size() == n_);
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ", ";
    out += universe.label(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace hermin

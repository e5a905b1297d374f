#include "lrkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lrkit {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition needs rank >= 1");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("negative part in " + to_string());
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw InvalidArgument("parts are not weakly decreasing in " + to_string());
    }
    size_ = checked::add(size_, parts_[i]);
  }
}

Partition Partition::padded(std::vector<Int> parts, int rank) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  if (parts.size() > static_cast<std::size_t>(rank)) {
    // Zeros beyond the rank are harmless; anything else is not.
    if (std::any_of(parts.begin() + rank, parts.end(), [](Int p) { return p != 0; })) {
      throw InvalidArgument("more than " + std::to_string(rank) + " nonzero parts");
    }
    parts.resize(static_cast<std::size_t>(rank));
  }
  parts.resize(static_cast<std::size_t>(rank), 0);
  return Partition(std::move(parts));
}

Partition Partition::zero(int rank) { return padded({}, rank); }

Partition Partition::parse(std::string_view text, int rank) {
  std::vector<Int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  while (pos <= text.size() && !text.empty()) {
    auto comma = text.find(',', pos);
    auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    Int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range) throw OverflowError("part out of range: " + std::string(token));
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (rank > 0) return padded(std::move(parts), rank);
  return Partition(std::move(parts));
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](Int p) { return p > 0; }));
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < std::max(rank(), inner.rank()); ++i) {
    Int outer_part = i < rank() ? (*this)[i] : 0;
    Int inner_part = i < inner.rank() ? inner[i] : 0;
    if (inner_part > outer_part) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

LRTriple::LRTriple(Partition l, Partition m, Partition v)
    : lambda(std::move(l)), mu(std::move(m)), nu(std::move(v)) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank()) {
    throw InvalidArgument("triple has mismatched ranks");
  }
}

bool LRTriple::balanced() const { return nu.size() == checked::add(lambda.size(), mu.size()); }

Partition dual_star(const Partition& lambda) {
  const int n = lambda.rank();
  std::vector<Int> parts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = lambda.first() - lambda[n - 1 - i];
  return Partition(std::move(parts));
}

Partition bar_reduce(const Partition& lambda) {
  std::vector<Int> parts(lambda.parts().begin(), lambda.parts().end());
  const Int last = lambda.last();
  for (auto& p : parts) p -= last;
  return Partition(std::move(parts));
}

bool is_near_rectangular(const Partition& lambda) {
  for (int i = 2; i + 1 < lambda.rank(); ++i) {
    if (lambda[i] != lambda[1]) return false;
  }
  return true;
}

Partition from_fundamental(const FundamentalCoords& coords) {
  if (coords.n != 3 && coords.n != 4) throw InvalidArgument("fundamental coordinates need rank 3 or 4");
  if (coords.k1 < 0 || coords.k2 < 0) throw InvalidArgument("fundamental coordinates must be nonnegative");
  return near_rectangular(checked::add(coords.k1, coords.k2), coords.k2, 0, coords.n);
}

Partition near_rectangular(Int first, Int middle, Int last, int rank) {
  if (rank < 2) throw InvalidArgument("near-rectangular shapes need rank >= 2");
  std::vector<Int> parts(static_cast<std::size_t>(rank), middle);
  parts.front() = first;
  parts.back() = last;
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda, int rank) {
  const int natural = static_cast<int>(lambda.first());
  std::vector<Int> parts;
  for (int j = 0; j < natural; ++j) {
    Int column = 0;
    for (int i = 0; i < lambda.rank() && lambda[i] > j; ++i) ++column;
    parts.push_back(column);
  }
  return Partition::padded(std::move(parts), rank > 0 ? rank : std::max(natural, 1));
}

namespace {

void fill_partitions(Int remaining, Int cap, int slots, std::vector<Int>& prefix, std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Largest feasible part first gives lexicographically decreasing output.
  Int hi = std::min(cap, remaining);
  for (Int part = hi; part >= 0; --part) {
    if (part * slots < remaining) break;
    prefix.push_back(part);
    fill_partitions(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(Int size, int rank, Int max_first) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  std::vector<Partition> out;
  if (size < 0 || max_first < 0) return out;
  std::vector<Int> prefix;
  prefix.reserve(static_cast<std::size_t>(rank));
  fill_partitions(size, max_first, rank, prefix, out);
  return out;
}

std::vector<Partition> enumerate_nu_candidates(const Partition& lambda, const Partition& mu) {
  if (lambda.rank() != mu.rank()) throw InvalidArgument("λ and μ have different ranks");
  return partitions_of(checked::add(lambda.size(), mu.size()), lambda.rank(),
                       checked::add(lambda.first(), mu.first()));
}

}  // namespace lrkit

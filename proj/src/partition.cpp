#include "chromsym/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chromsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int k) const {
  return (int)std::count(parts_.begin(), parts_.end(), k);
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  // Largest first part first gives reverse lexicographic order overall.
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::mutex cache_mutex;
std::map<int, std::vector<Partition>> partition_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: d must be nonnegative");
  // Map nodes are stable and never erased, so the reference outlives the lock.
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = partition_cache.find(d);
    if (it != partition_cache.end()) return it->second;
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(d, d, prefix, out);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return partition_cache.emplace(d, std::move(out)).first->second;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int j = 1; j <= p.part(1); ++j) {
    int count = 0;
    for (int x : p.parts())
      if (x >= j) ++count;
    cols.push_back(count);
  }
  return Partition(cols);
}

bool is_hook(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("is_hook: undefined for the empty partition");
  return p.part(2) <= 1;
}

int first_column_length(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("first_column_length: empty partition");
  return p.length();
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty part in partition '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad part '" + token + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

std::string to_string(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

int canonical_index(const Partition& p) {
  const auto& list = partitions_of(p.size());
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == p) return (int)i;
  throw std::logic_error("canonical_index: partition not found");
}

Partition partition_from_composition(const std::vector<int>& comp) {
  std::vector<int> parts;
  for (int c : comp) {
    if (c < 0) throw std::invalid_argument("composition parts must be nonnegative");
    if (c > 0) parts.push_back(c);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace chromsym

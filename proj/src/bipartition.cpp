#include "littlent/bipartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace littlent {

Bipartition::Bipartition(int n, std::vector<int> a) : n_(n), a_(std::move(a)) {
  if (n < 2) throw std::invalid_argument("Bipartition: need n >= 2");
  std::sort(a_.begin(), a_.end());
  a_.erase(std::unique(a_.begin(), a_.end()), a_.end());
  if (a_.empty() || int(a_.size()) >= n)
    throw std::invalid_argument(
        "Bipartition: A must be a nonempty proper subset");
  for (int q : a_)
    if (q < 0 || q >= n)
      throw std::invalid_argument("Bipartition: qubit index out of range");
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(a_.begin(), a_.end(), q)) b_.push_back(q);
}

std::string Bipartition::label() const {
  std::string out;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(a_[i]);
  }
  return out;
}

std::vector<Bipartition> Bipartition::contiguous(int n) {
  std::vector<Bipartition> out;
  for (int k = 1; k < n; ++k) {
    std::vector<int> a(k);
    for (int q = 0; q < k; ++q) a[q] = q;
    out.emplace_back(n, std::move(a));
  }
  return out;
}

Partition::Partition(int n, std::vector<std::vector<int>> parts)
    : n_(n), parts_(std::move(parts)) {
  std::vector<int> seen(n, 0);
  for (auto& part : parts_) {
    if (part.empty())
      throw std::invalid_argument("Partition: empty part");
    std::sort(part.begin(), part.end());
    for (int q : part) {
      if (q < 0 || q >= n)
        throw std::invalid_argument("Partition: qubit index out of range");
      if (seen[q]++)
        throw std::invalid_argument("Partition: parts are not disjoint");
    }
  }
  for (int q = 0; q < n; ++q)
    if (!seen[q])
      throw std::invalid_argument("Partition: parts do not cover all qubits");
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> parts(n);
  for (int q = 0; q < n; ++q) parts[q] = {q};
  return Partition(n, std::move(parts));
}

}  // namespace littlent

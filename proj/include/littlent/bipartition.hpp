#pragma once

#include <string>
#include <vector>

namespace littlent {

// A split (A, B) of qubits {0..n-1}; A is a nonempty proper subset, stored
// sorted ascending.
class Bipartition {
 public:
  Bipartition(int n, std::vector<int> a);

  int num_qubits() const { return n_; }
  const std::vector<int>& a_side() const { return a_; }
  const std::vector<int>& b_side() const { return b_; }
  int a_size() const { return int(a_.size()); }

  // "0+1+2" style label for reports.
  std::string label() const;

  // All prefix splits A = {0..k-1}, k = 1..n-1.
  static std::vector<Bipartition> contiguous(int n);

 private:
  int n_;
  std::vector<int> a_;
  std::vector<int> b_;
};

// Disjoint nonempty subsets covering {0..n-1}.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> parts);

  int num_qubits() const { return n_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }

  static Partition singletons(int n);

 private:
  int n_;
  std::vector<std::vector<int>> parts_;
};

}  // namespace littlent

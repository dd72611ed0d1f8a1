#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace slnchar {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates
  static Partition sorted(std::vector<int> parts);  // sorts, drops zeros
  static Partition parse(const std::string& s);     // "3,2,1" or "3 2 1"

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition dual() const;
  // n(λ) = Σ (i-1) λ_i
  int n_invariant() const;
  // multiplicities m_k, index k = 1..size
  std::vector<int> multiplicities() const;
  // |centralizer| of a permutation of this cycle type
  std::uint64_t z_order() const;
  Partition scaled(int d) const;                       // parts multiplied by d
  Partition divided(int d) const;                      // requires d | parts
  Partition repeated(int k) const;                     // each part k times
  bool all_divisible_by(int d) const;
  int gcd_parts() const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Multipartition = std::vector<Partition>;

Partition merge(const Multipartition& beta);
Partition merge(const Partition& a, const Partition& b);
// λ ⊵ μ
bool dominates(const Partition& lambda, const Partition& mu);
// all partitions of n, reverse lexicographic order (largest first)
const std::vector<Partition>& partitions_of(int n);
std::uint64_t partition_count(int n);
std::uint64_t factorial(int n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
long long mod_floor(long long a, long long m);
int euler_phi(int n);
std::vector<int> divisors(int n);
// largest divisor of n coprime to p
int prime_to_part(int n, int p);
bool is_prime(long long p);
// q = p^k ?  returns k or 0
int prime_power_exponent(long long q, long long p);

}  // namespace slnchar

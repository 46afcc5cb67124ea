#pragma once

#include <vector>

namespace wba {

// Integer partitions as weakly decreasing vectors of positive parts. The
// empty vector is the unique partition of 0.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);

// All partitions of n, largest first part first: (3), (2,1), (1,1,1).
const std::vector<Partition>& partitions_of(int n);

unsigned long long binomial(int n, int k);
unsigned long long factorial_ull(int n);

// Number of standard Young tableaux of the given shape (hook lengths).
unsigned long long syt_count(const Partition& shape);

// Littlewood-Richardson coefficient c^{nu}_{lam, mu}, computed by counting
// column-strict skew fillings of nu/lam with content mu whose reverse
// reading word satisfies the lattice condition. Memoized.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Irreducible symmetric group character chi^lam evaluated on the class of
// cycle type rho (border strip recursion, memoized). |lam| must equal |rho|.
long long mn_character(const Partition& lam, const Partition& rho);

// The same Littlewood-Richardson coefficient obtained as a character inner
// product over the Young subgroup, with no tableau combinatorics. Serves as
// an independent cross-check of lr_coefficient.
long long lr_via_characters(const Partition& lam, const Partition& mu, const Partition& nu);

// Order of the centralizer of the class of cycle type rho in the symmetric
// group: product over distinct part sizes k of k^{m_k} * m_k!.
unsigned long long centralizer_order(const Partition& rho);

// Cycle type of a permutation in one-line form (p[i] = image of i),
// returned as a partition of p.size().
Partition cycle_type_of(const std::vector<int>& p);

} // namespace wba

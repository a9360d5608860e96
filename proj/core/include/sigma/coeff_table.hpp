#ifndef SIGMA_COEFF_TABLE_HPP
#define SIGMA_COEFF_TABLE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sigma/errors.hpp"

namespace sigma {

class Checkpoint;

// Exponent pair of the double expansion: i counts powers of g2 z^4 / 2,
// j counts powers of 2 g3 z^6. Signed so that lookups just outside the
// quadrant resolve to zero instead of being a type error.
struct Index {
    long i = 0;
    long j = 0;

    friend bool operator==(const Index&, const Index&) = default;
};

// Dependency weight 2i + 3j. Every term on the right-hand side of the
// recursion sits at weight s-1 or s-2, so diagonals of constant weight are
// computable in increasing order.
constexpr long weight(Index idx) { return 2 * idx.i + 3 * idx.j; }

// Rectangle of exact integer expansion coefficients, stored over the
// triangular working set {(i, j) : i, j >= 0, 2i + 3j <= 2*max_i + 3*max_j}.
// The recursion for an in-rectangle entry reads neighbours outside the
// rectangle, so the working set is the dependency closure of the rectangle.
// Absent entries are distinguished from stored zeros.
class CoeffTable {
public:
    CoeffTable(long max_i, long max_j);

    long max_i() const { return max_i_; }
    long max_j() const { return max_j_; }

    // Upper weight bound of the working set: 2*max_i + 3*max_j.
    long weight_cap() const { return weight_cap_; }

    bool in_working_set(Index idx) const;
    bool contains(Index idx) const;

    // The coefficient at idx. Zero for indices outside the quadrant; throws
    // NotComputed for in-quadrant indices that are absent.
    const mpz_class& coefficient(Index idx) const;

    // Unchecked insert; the loader and the engine are responsible for only
    // storing values that belong at idx.
    void set(Index idx, mpz_class value);

    // Largest s such that every working-set index of weight <= s is present
    // (which covers every in-rectangle index of weight <= s); -1 when even
    // (0, 0) is absent.
    long completed_weight() const;
    bool complete() const { return completed_weight() == weight_cap_; }

    std::size_t size() const;

    // Visits present entries ordered by (weight, i) ascending.
    void for_each(const std::function<void(Index, const mpz_class&)>& fn) const;

    // All working-set indices of weight s, ordered by i ascending.
    std::vector<Index> diagonal(long s) const;

    friend bool operator==(const CoeffTable& a, const CoeffTable& b);

private:
    std::size_t slot(Index idx) const;

    long max_i_;
    long max_j_;
    long weight_cap_;
    std::vector<std::size_t> row_offset_;  // per i; one extra entry = total
    std::vector<mpz_class> values_;
    std::vector<std::uint8_t> present_;
};

// Computes the coefficient table for the rectangle [0, max_i] x [0, max_j],
// including the dependency closure, in wavefront order over the weight.
// Within a diagonal, entries are computed by `workers` threads; the result
// is identical for every worker count. Each step evaluates the recursion in
// scaled integer form
//
//   R = 9(i+1) a(i+1, j-1) + 16(j+1) a(i-2, j+1)
//       - (4i+6j-1)(2i+3j-1) a(i-1, j)
//
// asserts 3 | R (DivisibilityViolation otherwise) and stores a(i, j) = R / 3.
CoeffTable compute_rectangle(long max_i, long max_j, unsigned workers = 1);

// Same, but seeded from a previously saved snapshot. The snapshot's bounds
// must match the request, and every stored entry is re-validated against the
// recursion before the remaining diagonals are computed (CheckpointMismatch
// on any disagreement).
CoeffTable compute_rectangle(long max_i, long max_j, unsigned workers,
                             const Checkpoint& resume_from);

}  // namespace sigma

#endif  // SIGMA_COEFF_TABLE_HPP

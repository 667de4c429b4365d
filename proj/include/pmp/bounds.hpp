#ifndef PMP_BOUNDS_HPP
#define PMP_BOUNDS_HPP

// Central knobs for every quantitative guarantee the library makes. Tests
// assert against these exact values, so tighten or relax them here rather
// than editing the tests. All move-count budgets are stated for a connected
// tree/graph with N vertices, n pebbles and diameter D.
namespace pmp::bounds {

// Budget factor for "strongly related" rearrangements: operations that only
// shuffle pebbles within a bounded working set emit at most
// c_rel * (N + n * D) moves.
inline constexpr double c_rel = 4.0;

// swap_pebbles: exact exchange of two pebbles on a sparse tree (N >= 3n),
// at most c_swap * (N + n * D) moves.
inline constexpr double c_swap = 10.0;

// partition_rivet / partition_isthmus: at most
// c_partition * (n * D + n^2 * log2(max(n, 2))) moves.
inline constexpr double c_partition = 18.0;

// sort_rivet / sort_isthmus: at most
// c_sort * (n * D + n^2 * log2(max(n, 2))) moves.
inline constexpr double c_sort = 64.0;

// solve_ample (N >= 3n): at most c_ample * (n * D + n^2 * log2(max(n, 2))).
inline constexpr double c_ample = 80.0;

// solve_bounded_isthmus with isthmus bound M: at most c_bounded(M) * n * D
// moves on the curated benchmark instances; the factor grows with M^2.
inline constexpr double c_bounded_base = 24.0;
inline constexpr double c_bounded(int m) {
  return c_bounded_base * static_cast<double>((m + 2) * (m + 2));
}

// Default isthmus bound below which the main solver dispatches to the
// constant-isthmus routine.
inline constexpr int bounded_isthmus_cutoff = 8;

}  // namespace pmp::bounds

#endif  // PMP_BOUNDS_HPP

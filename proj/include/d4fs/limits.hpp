#ifndef D4FS_LIMITS_HPP
#define D4FS_LIMITS_HPP

#include <array>
#include <vector>

#include "d4fs/conditions.hpp"
#include "d4fs/monomial.hpp"

namespace d4fs {

/// The blocks n_0..n_4 and m_i = shift(n_s(i), -1) * n_i, s = (0 1)(3 4).
struct TailBlocks {
  std::array<Monomial, 5> n;
  std::array<Monomial, 5> m;
};

const TailBlocks& tail_blocks();

/// m_Lambda = prod m_i^{k_i}, supported in degrees -2 and -1.
Monomial tail_block(const HighestWeight& w);

/// m * shift(m_Lambda, +2).
Monomial embed_step(const Monomial& m, const HighestWeight& w);

/// IC for the extremal vector at -2 step: a bound violation if any factor has
/// degree >= 2 step, otherwise satisfies_ic(shift(m, -2 step), w).
Verdict satisfies_ic_shifted(const Monomial& m, const HighestWeight& w, int step);

/// Monomials with degrees in [-max_depth, 2 step - 1] satisfying DC(level) and
/// the shifted IC, in graded order. Built as the +2 step shift of
/// enumerate_admissible(w, max_depth + 2 step); each element is re-checked.
std::vector<Monomial> generating_set_shifted(const HighestWeight& w, int step, int max_depth);

/// head * m_Lambda^{+2t+2} * m_Lambda^{+2t+4} * ...
struct SemiInfiniteMonomial {
  Monomial head;
  int tail_index = 0;
  HighestWeight weight;
};

/// Head times the first `blocks` tail blocks.
Monomial truncate(const SemiInfiniteMonomial& s, int blocks);

/// Tail blocks meeting the head's degree range, plus two.
int depth0(const SemiInfiniteMonomial& s);

/// DC at level(weight) for every truncation, decided at depth0.
bool semi_dc_check(const SemiInfiniteMonomial& s);

}  // namespace d4fs

#endif  // D4FS_LIMITS_HPP

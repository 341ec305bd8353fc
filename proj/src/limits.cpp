#include "d4fs/limits.hpp"

#include <stdexcept>

#include "d4fs/enumeration.hpp"

namespace d4fs {

const TailBlocks& tail_blocks() {
  static const TailBlocks blocks = [] {
    TailBlocks t;
    t.n[0] = Monomial{{Color::c2, -1}, {Color::c2b, -1}};
    t.n[2] = Monomial{{Color::c3, -1}, {Color::c3b, -1}};
    t.n[3] = Monomial{{Color::c4, -1}};
    t.n[4] = Monomial{{Color::c4b, -1}};
    constexpr std::array<int, 5> partner = {1, 0, 2, 4, 3};
    for (std::size_t i = 0; i < 5; ++i) t.m[i] = multiply(shift(t.n[static_cast<std::size_t>(partner[i])], -1), t.n[i]);
    return t;
  }();
  return blocks;
}

Monomial tail_block(const HighestWeight& w) {
  Monomial out;
  for (std::size_t i = 0; i < 5; ++i) out = multiply(out, power(tail_blocks().m[i], w.k[i]));
  return out;
}

Monomial embed_step(const Monomial& m, const HighestWeight& w) { return multiply(m, shift(tail_block(w), 2)); }

Verdict satisfies_ic_shifted(const Monomial& m, const HighestWeight& w, int step) {
  if (step < 0) throw std::invalid_argument("step must be nonnegative");
  if (!m.empty() && m.max_degree() >= 2 * step) return {false, {{Table::bound, 0, 0}}};
  return satisfies_ic(shift(m, -2 * step), w);
}

std::vector<Monomial> generating_set_shifted(const HighestWeight& w, int step, int max_depth) {
  if (step < 0 || max_depth < 0) throw std::invalid_argument("step and depth must be nonnegative");
  std::vector<Monomial> out = enumerate_admissible(w, max_depth + 2 * step);
  const int k = w.level();
  for (Monomial& m : out) {
    m = shift(m, 2 * step);
    if (!dc_holds(m, k) || !satisfies_ic_shifted(m, w, step).satisfied)
      throw std::logic_error("shifted spanning set element fails its conditions: " + format_monomial(m));
  }
  return out;
}

Monomial truncate(const SemiInfiniteMonomial& s, int blocks) {
  if (blocks < 0) throw std::invalid_argument("depth must be nonnegative");
  const Monomial block = tail_block(s.weight);
  Monomial out = s.head;
  for (int i = 1; i <= blocks; ++i) out = multiply(out, shift(block, 2 * s.tail_index + 2 * i));
  return out;
}

int depth0(const SemiInfiniteMonomial& s) {
  if (s.head.empty()) return 2;
  // Block i occupies degrees 2t+2i-2 and 2t+2i-1.
  const int reach = s.head.max_degree() + 1;
  const int lowest = 2 * s.tail_index;
  const int touching = reach < lowest ? 0 : (reach - lowest) / 2 + 1;
  return touching + 2;
}

bool semi_dc_check(const SemiInfiniteMonomial& s) {
  return dc_holds(truncate(s, depth0(s)), s.weight.level());
}

}  // namespace d4fs

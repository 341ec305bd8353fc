#ifndef D4FS_RELATIONS_HPP
#define D4FS_RELATIONS_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "d4fs/bigint.hpp"
#include "d4fs/conditions.hpp"
#include "d4fs/monomial.hpp"

namespace d4fs {

/// Integer combination of color exponent vectors x_c2b^e0 ... x_c2^e5.
/// Zero coefficients are never stored.
class ColorPolynomial {
 public:
  using Terms = std::map<ColorCounts, BigInt>;

  ColorPolynomial() = default;
  static ColorPolynomial term(const ColorCounts& exponents, BigInt coefficient = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Common total degree of the terms; -1 for the zero polynomial.
  int degree() const noexcept;

  void add(const ColorCounts& exponents, const BigInt& coefficient);

  friend bool operator==(const ColorPolynomial&, const ColorPolynomial&) = default;

 private:
  Terms terms_;
};

/// Chevalley generators of l0 acting on g1.
enum class Operator { E, A, B };

const char* operator_name(Operator op) noexcept;

/// E: c2->c3, c3b->c2b.  A: c3->c4, c4b->c3b.  B: c3->c4b, c4->c3b.  Everything else -> 0.
struct DerivationRule {
  Operator op;
  std::array<std::optional<Color>, kNumColors> image;

  static const DerivationRule& of(Operator op);
};

/// Leibniz extension of the rule to products of commuting variables.
ColorPolynomial apply_derivation(const DerivationRule& rule, const ColorPolynomial& p);

/// Sum of the parameter counts named by `vars`.
struct LinearForm {
  std::vector<SlotTerm> vars;
  int evaluate(const FrequencyProfile& params) const noexcept;
};

/// Base monomial and operator word (applied front to back) producing the
/// relation whose minimal term is the violating profile.
struct RelationRecipe {
  Table table;  // dc rows 1..10, ic rows 5 and 6
  int condition;
  std::vector<std::pair<Color, LinearForm>> base;
  std::vector<std::pair<Operator, LinearForm>> word;

  ColorCounts base_exponents(const FrequencyProfile& params) const noexcept;
};

std::span<const RelationRecipe> dc_recipes() noexcept;
const RelationRecipe& dc_recipe(int condition);
/// IC rows (v) and (vi): B-power relations on degree -1 monomials.
const RelationRecipe& ic_recipe(int condition);

class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the recipe word to its base without any precondition checks.
ColorPolynomial apply_recipe(const RelationRecipe& recipe, const FrequencyProfile& params);

/// Checks that params solve the recipe's critical equality at level k and that the
/// base has no opposite color pair; throws RelationError on an inadmissible base or
/// a zero result and std::invalid_argument on bad params.
ColorPolynomial derive_relation(const RelationRecipe& recipe, const FrequencyProfile& params, int k);

struct MinimalTerm {
  Monomial monomial;
  BigInt net_coefficient;
  int attaining_terms = 0;
};

/// The least monomial obtained by placing b_total factors of some term at degree
/// -j-1 and a_total at degree -j, with the coefficient it collects from the
/// series product (term coefficient times prod_c C(e_c, b_c)).
MinimalTerm minimal_monomial(const ColorPolynomial& p, int j, int b_total, int a_total);

struct RelationRecord {
  int condition = 0;
  FrequencyProfile params;
  Monomial leading_term;
  Monomial minimal;
  BigInt net_coefficient;
  int attaining_terms = 0;
  bool passed = false;
  std::string error;
};

struct RelationReport {
  int level = 0;
  std::vector<RelationRecord> records;
  std::size_t failures = 0;
  std::size_t distinct_leading_terms = 0;
};

/// Every (condition, critical solution) pair at level k, window 1.
/// OpenMP-parallel over instances; records in deterministic order.
RelationReport verify_leading_terms(int k);
RelationReport verify_leading_terms_serial(int k);

/// True if x_c(-1)^{counts} v_{Lambda_i} vanishes by the known vanishing relations:
/// a factor from the kill set of Lambda_i, or any pair of non-opposite colors.
bool known_to_vanish_on_fundamental(int i, const ColorCounts& counts);

/// True if every distribution of the degree -1 factors over the tensor slots of
/// v_Lambda puts a vanishing submonomial on some slot.
bool annihilates_highest_weight_vector(const ColorCounts& counts, const HighestWeight& w);

enum class IcMethod { annihilation, relation, delegated };

const char* ic_method_name(IcMethod m) noexcept;

struct IcRecord {
  int row = 0;
  IcMethod method = IcMethod::annihilation;
  Monomial monomial;                     // the violating degree -1 monomial
  std::optional<Monomial> base;          // relation base, when a relation is used
  std::optional<MinimalTerm> minimal;    // minimal term of that relation
  bool passed = false;
  std::string detail;
};

struct IcReport {
  HighestWeight weight;
  std::vector<IcRecord> records;
  std::size_t failures = 0;
};

/// Checks every IC row on every degree -1 profile of total capacity+1 supported on its colors.
IcReport verify_ic_leading_terms(const HighestWeight& w);

}  // namespace d4fs

#endif  // D4FS_RELATIONS_HPP

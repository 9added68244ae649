// Conservative decisions about the Bogomolov multiplier B0(G) and the
// resulting verdict on extending free actions.
//
// The engine only ever derives B0 = 0 from structural facts it can check
// on the group. A nonzero multiplier is never inferred; it has to be
// asserted by the caller.

#ifndef HBODY_B0_HPP_
#define HBODY_B0_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hbody/group.hpp"

namespace hbody {

  enum class B0Value { zero, nonzero, unknown };

  struct B0Status {
    B0Value value = B0Value::unknown;
    //! Rule chain for derived values, "asserted" for overrides; for
    //! unknown, the rules that were tried.
    std::string reason;
    //! Set when an override contradicts a derived value.
    std::optional<std::string> warning;
  };

  //! Rules, in order:
  //!   R1 abelian;
  //!   R2 |G| = p^k with k <= 4;
  //!   R3 Z(G) of prime order p and G/Z(G) elementary abelian (extraspecial);
  //!   R4 G' abelian and G/G' cyclic;
  //!   R5 not a p-group and every Sylow subgroup is zero by these rules;
  //!   R6 G = H x K for recognised normal H, K both zero by these rules.
  //! If none applies, `override_value` (if any) is used, else unknown.
  B0Status b0_status(FiniteGroup const&     g,
                     std::optional<B0Value> override_value = {});

  enum class ExtendValue {
    all_free_actions_extend,
    exists_non_extendable_free_action,
    unknown
  };

  struct ExtendVerdict {
    ExtendValue value = ExtendValue::unknown;
    std::string basis;
  };

  //! zero -> every free action extends; nonzero with at most one involution
  //! -> some free action does not extend; anything else is unknown.
  ExtendVerdict samperton_verdict(FiniteGroup const& g, B0Status const& s);

  std::string to_string(B0Value v);
  std::string to_string(ExtendValue v);
  //! Accepts "zero" / "nonzero".
  std::optional<B0Value> parse_b0_value(std::string const& text);

  //! Individual structural checks, exposed for testing the rule premises.
  bool is_p_group_of_order_at_most_p4(FiniteGroup const& g);
  bool is_extraspecial(FiniteGroup const& g);
  bool has_abelian_derived_and_cyclic_abelianization(FiniteGroup const& g);
  //! Normal subgroups (H, K) with H x K = G, both nontrivial, or nullopt.
  std::optional<std::pair<Subgroup, Subgroup>> direct_factorization(FiniteGroup const& g);

}  // namespace hbody

#endif  // HBODY_B0_HPP_

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divseq/polynomial.hpp"

namespace divseq {

/// Renders p as text over the named variables: integer coefficients, `*`
/// between factors, `^` for powers, terms in descending lexicographic order.
std::string format_poly(const Poly& p, const std::vector<std::string>& variables);

/**
 * Parses polynomial text over the named variables.
 *
 * Grammar: sums and differences of products of powers, with integer
 * literals, variables, parentheses and unary signs. `*` is optional between
 * adjacent factors ("2x", "3(x+1)"). Exponents are nonnegative integer
 * literals. Throws DomainError on malformed text or unknown names.
 */
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

} // namespace divseq

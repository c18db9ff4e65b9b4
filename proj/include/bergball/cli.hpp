#ifndef BERGBALL_CLI_HPP
#define BERGBALL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bergball/bhsuite.hpp"

namespace bergball {

/**
 * Parses a bidegree polynomial from the term grammar
 *
 *     poly   := term ('+' term)*
 *     term   := factor ('*' factor)*
 *     factor := scalar | 'z^' index | 'zbar^' index
 *     index  := '(' int (',' int)* ')'
 *
 * Whitespace is ignored.  Scalars use the canonical text of the arithmetic
 * layer ("3", "-1/2", "(1/2+3/4*i)"); complex scalars must be parenthesized,
 * which keeps '+' and '*' unambiguous at the top level.  The grammar
 * round-trips BiPolynomial::to_string().  Raises ParseError on malformed
 * input and DimensionMismatch when an index has the wrong length.
 */
BiPolynomial parse_bipoly_text(const std::string& text, int dimension);

/**
 * Serializes a scenario to the documented JSON schema:
 *
 *     { "dimension": N,
 *       "pairs":    [ {"f": [term...], "g": [...], "u": [...], "v": [...]} ],
 *       "h":        [ term... ],
 *       "rank_one": [ {"x": [term...], "y": [term...]} ] }
 *
 * where every polynomial is a list of terms {"coeff": "<scalar text>",
 * "alpha": [a1..aN], "beta": [b1..bN]}.  The symbol h must be a bidegree
 * polynomial (ImproperFunction otherwise).  Output is deterministic: fixed
 * key order, two-space indentation, trailing newline.
 */
std::string scenario_to_json(const BHScenario& sc);

/** Parses the schema above; raises ParseError on malformed input and the
 *  usual construction errors (NotHolomorphic, DimensionMismatch, ...) when
 *  the content is invalid. */
BHScenario scenario_from_json(const std::string& text);

/**
 * Runs one CLI invocation against the given argument vector (without the
 * program name) and streams.  Subcommands:
 *
 *     identities   symbolic derivation identities, the radial recursion,
 *                  and the sampled kernel-identity registry
 *     operators    truncated-operator consistency checks (semi-commutator
 *                  identity, transform fixed points, ball averages)
 *     construct    range decision + preimage symbol for a polynomial target
 *     verify-bh    verify a scenario file against the factorization theorem
 *     suite        the built-in verification suite at chosen parameters
 *     report       re-render a JSON report as markdown
 *
 * Exit code 0 when every executed check passed (skips are allowed), 1 when
 * any check was refuted (the report is still emitted), 2 on usage or parse
 * errors (diagnostic on the error stream).
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bergball

#endif

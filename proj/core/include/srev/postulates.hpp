#pragma once

#include "srev/operators.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srev {

enum class Postulate
{
    // AGM revision
    revision_closure,
    revision_success,
    revision_inclusion,
    revision_vacuity,
    revision_consistency,
    revision_extensionality,
    revision_disjunctive_overlap,
    revision_disjunctive_inclusion,
    // AGM contraction
    contraction_closure,
    contraction_inclusion,
    contraction_vacuity,
    contraction_success,
    contraction_recovery,
    contraction_extensionality,
    contraction_conjunctive_overlap,
    contraction_conjunctive_inclusion,
    // two-level credibility-limited revision
    consistency_preservation,
    confirmation,
    strict_improvement,
    regularity,
    disjunctive_distribution,
    n_recovery,
    n_relative_success,
    n_persistence,
    n_success_propagation,
    weak_relative_success,
    weak_vacuity,
    weak_disjunctive_inclusion,
    containment,
    closure,
    inclusion,
    vacuity,
    extensionality,
    disjunctive_overlap,
    disjunctive_inclusion,
    // properties of a credible set C
    credibility_of_logical_equivalents,
    single_sentence_closure,
    element_consistency,
    credibility_lower_bounding,
    // relation between C and a revision
    condition_c_star,
};

enum class PostulateFamily
{
    revision,
    contraction,
    two_level,
    credibility,
    relational,
};

struct PostulateInfo
{
    Postulate id;
    std::string_view name;          // kebab-case, as used on the command line
    std::string_view label;         // short tag such as "(*2)"
    PostulateFamily family;
    int arity;                      // 1: quantifies over a; 2: over a and b
    bool needs_credible;            // requires CheckContext::credible
    bool vacuous;                   // satisfied by the extensional representation
    std::string_view sentence_form; // statement over sentences
    std::string_view world_form;    // the transcription actually checked
};

std::span< const PostulateInfo > catalog();
const PostulateInfo& info( Postulate p );

class UnknownPostulate : public std::invalid_argument
{
public:
    explicit UnknownPostulate( std::string_view name );
};

class MissingContext : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

std::optional< Postulate > find_postulate( std::string_view name );
// Throws UnknownPostulate.
Postulate parse_postulate( std::string_view name );

// The eleven postulates characterising sphere-based two-level operators.
std::span< const Postulate > representation_suite();
std::span< const Postulate > revision_postulates();
std::span< const Postulate > contraction_postulates();
std::span< const Postulate > two_level_postulates();

struct Side
{
    std::string label;
    PropCode value;

    friend bool operator==( const Side&, const Side& ) = default;
};

struct Witness
{
    PropCode alpha = 0;
    std::optional< PropCode > beta;
    std::vector< Side > sides; // the propositions that break the world-level form
    std::string detail;
};

// "a=0x1 b=0x4 [o(A)&B=0x4]"
std::string to_string( const Witness& w );

struct Verdict
{
    bool pass = true;
    std::optional< Witness > witness;
    std::string note;
};

// Sentence-level view of an operator, used by the extensionality probe. When
// unset the operator's table is consulted through models().
using SentenceProbe = std::function< Proposition( const Formula& ) >;

struct CheckContext
{
    std::optional< PropositionSet > credible;
    SentenceProbe probe;
};

// Throws MissingContext if the postulate needs a credible set and none is given.
Verdict check( Postulate p, const ExtensionalOperator& op, const CheckContext& ctx = {} );

// Replays a single instance of the world-level form. Returns the violated
// sides, or nullopt if the instance holds.
std::optional< std::vector< Side > > violation_at( Postulate p, const ExtensionalOperator& op, const CheckContext& ctx,
                                                   PropCode alpha, PropCode beta = 0 );

Verdict check_condition_c_star( const PropositionSet& credible, const ExtensionalOperator& star );

struct SuiteReport
{
    std::vector< std::pair< Postulate, Verdict > > results;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] std::vector< Postulate > failures() const;
};

SuiteReport check_suite( std::span< const Postulate > ids, const ExtensionalOperator& op,
                         const CheckContext& ctx = {} );

// Syntactically distinct formulas with the same models as `p`, starting with
// its canonical DNF. Always at least eight.
std::vector< Formula > equivalent_variants( const Proposition& p, const Signature& sig );

struct Implication
{
    std::string_view name;
    std::vector< Postulate > premises;
    Postulate conclusion;
};

// Known consequences among the two-level postulates.
std::span< const Implication > observations();

struct ImplicationVerdict
{
    bool premises_hold = false;
    bool conclusion_holds = false;
    std::optional< Witness > witness; // conclusion witness when violated

    [[nodiscard]] bool violated() const noexcept { return premises_hold && !conclusion_holds; }
};

ImplicationVerdict check_implication( const Implication& imp, const ExtensionalOperator& op,
                                      const CheckContext& ctx = {} );

} // namespace srev

#include "srev/postulates.hpp"

#include <algorithm>
#include <array>

namespace srev {

namespace {

using P = Postulate;
using F = PostulateFamily;

// Notation in world forms: A = ||a||, B = ||b||, k = ||K||, M = all worlds,
// -A = complement, & and | on world sets, <= subset, o/r/c = the table.
constexpr PostulateInfo catalog_rows[] = {
    { P::revision_closure, "revision-closure", "(*1)", F::revision, 1, false, true,
      "K*a = Cn(K*a)", "vacuous: every entry is the model set of a belief set" },
    { P::revision_success, "revision-success", "(*2)", F::revision, 1, false, false,
      "a in K*a", "r(A) <= A" },
    { P::revision_inclusion, "revision-inclusion", "(*3)", F::revision, 1, false, false,
      "K*a subset K+a", "k&A <= r(A)" },
    { P::revision_vacuity, "revision-vacuity", "(*4)", F::revision, 1, false, false,
      "if ~a not in K then K+a subset K*a", "k&A != {} implies r(A) <= k&A" },
    { P::revision_consistency, "revision-consistency", "(*5)", F::revision, 1, false, false,
      "if a is consistent then K*a is consistent", "A != {} implies r(A) != {}" },
    { P::revision_extensionality, "revision-extensionality", "(*6)", F::revision, 1, false, false,
      "if |- a<->b then K*a = K*b", "equivalent formula variants of A get identical results" },
    { P::revision_disjunctive_overlap, "revision-disjunctive-overlap", "(*7)", F::revision, 2, false, false,
      "K*a cap K*b subset K*(a|b)", "r(A|B) <= r(A)|r(B)" },
    { P::revision_disjunctive_inclusion, "revision-disjunctive-inclusion", "(*8)", F::revision, 2, false, false,
      "if ~a not in K*(a|b) then K*(a|b) subset K*a", "r(A|B)&A != {} implies r(A) <= r(A|B)" },

    { P::contraction_closure, "contraction-closure", "(-1)", F::contraction, 1, false, true,
      "K-a = Cn(K-a)", "vacuous: every entry is the model set of a belief set" },
    { P::contraction_inclusion, "contraction-inclusion", "(-2)", F::contraction, 1, false, false,
      "K-a subset K", "k <= c(A)" },
    { P::contraction_vacuity, "contraction-vacuity", "(-3)", F::contraction, 1, false, false,
      "if a not in K then K subset K-a", "not k <= A implies c(A) <= k" },
    { P::contraction_success, "contraction-success", "(-4)", F::contraction, 1, false, false,
      "if not |- a then a not in K-a", "A != M implies not c(A) <= A" },
    { P::contraction_recovery, "contraction-recovery", "(-5)", F::contraction, 1, false, false,
      "K subset (K-a)+a", "c(A)&A <= k" },
    { P::contraction_extensionality, "contraction-extensionality", "(-6)", F::contraction, 1, false, false,
      "if |- a<->b then K-a = K-b", "equivalent formula variants of A get identical results" },
    { P::contraction_conjunctive_overlap, "contraction-conjunctive-overlap", "(-7)", F::contraction, 2, false, false,
      "K-a cap K-b subset K-(a&b)", "c(A&B) <= c(A)|c(B)" },
    { P::contraction_conjunctive_inclusion, "contraction-conjunctive-inclusion", "(-8)", F::contraction, 2, false,
      false, "if a not in K-(a&b) then K-(a&b) subset K-a", "not c(A&B) <= A implies c(A) <= c(A&B)" },

    { P::consistency_preservation, "consistency-preservation", "CP", F::two_level, 1, false, false,
      "if K is consistent then Koa is consistent", "k != {} implies o(A) != {}" },
    { P::confirmation, "confirmation", "Conf", F::two_level, 1, false, false,
      "if a in K then Koa = K", "k <= A implies o(A) = k" },
    { P::strict_improvement, "strict-improvement", "SI", F::two_level, 2, false, false,
      "if a in Koa and |- a->b then b in Kob", "o(A) <= A and A <= B implies o(B) <= B" },
    { P::regularity, "regularity", "Reg", F::two_level, 2, false, false,
      "if b in Koa then b in Kob", "o(A) <= B implies o(B) <= B" },
    { P::disjunctive_distribution, "disjunctive-distribution", "DD", F::two_level, 2, false, false,
      "if a|b in Ko(a|b) then a in Koa or b in Kob", "o(A|B) <= A|B implies o(A) <= A or o(B) <= B" },
    { P::n_recovery, "n-recovery", "NRec", F::two_level, 1, false, false,
      "K subset Koa + ~a", "o(A)&-A <= k" },
    { P::n_relative_success, "n-relative-success", "NRS", F::two_level, 1, false, false,
      "if ~a in Koa then Koa = K", "o(A)&A = {} implies o(A) = k" },
    { P::n_persistence, "n-persistence", "NPers", F::two_level, 2, false, false,
      "if ~b in Kob then ~b in Koa", "o(B)&B = {} implies o(A)&B = {}" },
    { P::n_success_propagation, "n-success-propagation", "NSP", F::two_level, 2, false, false,
      "if ~a in Koa and |- b->a then ~b in Kob", "o(A)&A = {} and B <= A implies o(B)&B = {}" },
    { P::weak_relative_success, "weak-relative-success", "WRS", F::two_level, 1, false, false,
      "a in Koa or Koa subset K", "o(A) <= A or k <= o(A)" },
    { P::weak_vacuity, "weak-vacuity", "WVac", F::two_level, 1, false, false,
      "if ~a not in K then K subset Koa", "k&A != {} implies o(A) <= k" },
    { P::weak_disjunctive_inclusion, "weak-disjunctive-inclusion", "WDI", F::two_level, 2, false, false,
      "if ~a not in Ko(a|b) then Ko(a|b)+(a|b) subset Koa+a",
      "o(A|B)&A != {} implies o(A)&A <= o(A|B)&(A|B)" },
    { P::containment, "containment", "Cont", F::two_level, 1, false, false,
      "if K is consistent then K cap ((Koa)+a) subset Koa", "k != {} implies o(A) <= k|(o(A)&A)" },
    { P::closure, "closure", "Clos", F::two_level, 1, false, true,
      "Koa = Cn(Koa)", "vacuous: every entry is the model set of a belief set" },
    { P::inclusion, "inclusion", "Incl", F::two_level, 1, false, false,
      "Koa subset K+a", "k&A <= o(A)" },
    { P::vacuity, "vacuity", "Vac", F::two_level, 1, false, false,
      "if ~a not in K then K+a subset Koa", "k&A != {} implies o(A) <= k&A" },
    { P::extensionality, "extensionality", "Ext", F::two_level, 1, false, false,
      "if |- a<->b then Koa = Kob", "equivalent formula variants of A get identical results" },
    { P::disjunctive_overlap, "disjunctive-overlap", "DO", F::two_level, 2, false, false,
      "Koa cap Kob subset Ko(a|b)", "o(A|B) <= o(A)|o(B)" },
    { P::disjunctive_inclusion, "disjunctive-inclusion", "DI", F::two_level, 2, false, false,
      "if ~a not in Ko(a|b) then Ko(a|b) subset Koa", "o(A|B)&A != {} implies o(A) <= o(A|B)" },

    { P::credibility_of_logical_equivalents, "credibility-of-logical-equivalents", "CLE", F::credibility, 1, true,
      true, "if |- a<->b then a in C iff b in C", "vacuous: C is a set of propositions" },
    { P::single_sentence_closure, "single-sentence-closure", "SSC", F::credibility, 2, true, false,
      "if a in C then Cn(a) subset C", "A in C and A <= B implies B in C" },
    { P::element_consistency, "element-consistency", "EC", F::credibility, 1, true, false,
      "if a in C then a is consistent", "A in C implies A != {}" },
    { P::credibility_lower_bounding, "credibility-lower-bounding", "CLB", F::credibility, 1, true, false,
      "if K is consistent then K subset C", "k != {} and k <= A implies A in C" },

    { P::condition_c_star, "condition-c-star", "(C-*)", F::relational, 2, true, false,
      "if a not in C and b in C then ~a in K*b", "A not in C and B in C implies r(B)&A = {}" },
};

static_assert( std::size( catalog_rows ) == static_cast< std::size_t >( Postulate::condition_c_star ) + 1 );

constexpr std::array representation_ids = {
    P::weak_relative_success, P::closure,           P::inclusion,         P::consistency_preservation,
    P::vacuity,               P::extensionality,    P::strict_improvement, P::n_persistence,
    P::n_recovery,            P::disjunctive_overlap, P::disjunctive_inclusion,
};

constexpr std::array revision_ids = {
    P::revision_closure,     P::revision_success,        P::revision_inclusion,           P::revision_vacuity,
    P::revision_consistency, P::revision_extensionality, P::revision_disjunctive_overlap, P::revision_disjunctive_inclusion,
};

constexpr std::array contraction_ids = {
    P::contraction_closure,    P::contraction_inclusion,       P::contraction_vacuity,
    P::contraction_success,    P::contraction_recovery,        P::contraction_extensionality,
    P::contraction_conjunctive_overlap, P::contraction_conjunctive_inclusion,
};

constexpr std::array two_level_ids = {
    P::consistency_preservation, P::confirmation,        P::strict_improvement,     P::regularity,
    P::disjunctive_distribution, P::n_recovery,          P::n_relative_success,     P::n_persistence,
    P::n_success_propagation,    P::weak_relative_success, P::weak_vacuity,         P::weak_disjunctive_inclusion,
    P::containment,              P::closure,             P::inclusion,              P::vacuity,
    P::extensionality,           P::disjunctive_overlap, P::disjunctive_inclusion,
};

std::string hex( PropCode c )
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    do {
        out.push_back( digits[ c & 0xf ] );
        c >>= 4;
    } while ( c != 0 );
    std::reverse( out.begin(), out.end() );
    return "0x" + out;
}

bool sub( PropCode a, PropCode b ) { return ( a & ~b ) == 0; }

using Sides = std::optional< std::vector< Side > >;

Sides broken( std::initializer_list< Side > sides ) { return std::vector< Side >( sides ); }

const PropositionSet& credible_of( Postulate p, const CheckContext& ctx )
{
    if ( !ctx.credible )
        throw MissingContext( "postulate '" + std::string( info( p ).name ) + "' needs a credible set" );
    return *ctx.credible;
}

Sides extensional_violation( const ExtensionalOperator& op, const CheckContext& ctx, PropCode alpha,
                             std::string* detail )
{
    const auto& sig = op.sig();
    auto probe = [ & ]( const Formula& f ) {
        return ctx.probe ? ctx.probe( f ) : op.apply( models( f, sig ) );
    };
    auto variants = equivalent_variants( op.proposition( alpha ), sig );
    // Round-trip through the concrete syntax so the whole front end is exercised.
    std::vector< Formula > parsed;
    for ( const auto& v : variants )
        parsed.push_back( parse_formula( to_string( v, sig ), sig ) );

    const auto reference = probe( parsed.front() );
    for ( std::size_t i = 1; i < parsed.size(); ++i ) {
        auto result = probe( parsed[ i ] );
        if ( result != reference ) {
            if ( detail )
                *detail = "variant `" + to_string( parsed[ i ], sig ) + "` differs from `"
                          + to_string( parsed.front(), sig ) + "`";
            return broken( { { "canonical", static_cast< PropCode >( reference.code() ) },
                             { "variant", static_cast< PropCode >( result.code() ) } } );
        }
    }
    return std::nullopt;
}

Sides violation( Postulate p, const ExtensionalOperator& op, const CheckContext& ctx, PropCode a, PropCode b,
                 std::string* detail )
{
    const auto k = op.k_code();
    const auto m = op.universe_code();
    auto o = [ & ]( PropCode x ) { return op[ x ]; };

    switch ( p ) {
    case P::revision_closure:
    case P::contraction_closure:
    case P::closure:
    case P::credibility_of_logical_equivalents:
        return std::nullopt;

    case P::revision_extensionality:
    case P::contraction_extensionality:
    case P::extensionality:
        return extensional_violation( op, ctx, a, detail );

    case P::revision_success:
        if ( !sub( o( a ), a ) )
            return broken( { { "r(A)", o( a ) }, { "A", a } } );
        return std::nullopt;
    case P::revision_inclusion:
    case P::inclusion:
        if ( !sub( k & a, o( a ) ) )
            return broken( { { "k&A", k & a }, { "o(A)", o( a ) } } );
        return std::nullopt;
    case P::revision_vacuity:
    case P::vacuity:
        if ( ( k & a ) != 0 && !sub( o( a ), k & a ) )
            return broken( { { "o(A)", o( a ) }, { "k&A", k & a } } );
        return std::nullopt;
    case P::revision_consistency:
        if ( a != 0 && o( a ) == 0 )
            return broken( { { "A", a }, { "r(A)", 0 } } );
        return std::nullopt;
    case P::revision_disjunctive_overlap:
    case P::disjunctive_overlap:
        if ( !sub( o( a | b ), o( a ) | o( b ) ) )
            return broken( { { "o(A|B)", o( a | b ) }, { "o(A)|o(B)", o( a ) | o( b ) } } );
        return std::nullopt;
    case P::revision_disjunctive_inclusion:
    case P::disjunctive_inclusion:
        if ( ( o( a | b ) & a ) != 0 && !sub( o( a ), o( a | b ) ) )
            return broken( { { "o(A)", o( a ) }, { "o(A|B)", o( a | b ) } } );
        return std::nullopt;

    case P::contraction_inclusion:
        if ( !sub( k, o( a ) ) )
            return broken( { { "k", k }, { "c(A)", o( a ) } } );
        return std::nullopt;
    case P::contraction_vacuity:
        if ( !sub( k, a ) && !sub( o( a ), k ) )
            return broken( { { "c(A)", o( a ) }, { "k", k } } );
        return std::nullopt;
    case P::contraction_success:
        if ( a != m && sub( o( a ), a ) )
            return broken( { { "c(A)", o( a ) }, { "A", a } } );
        return std::nullopt;
    case P::contraction_recovery:
        if ( !sub( o( a ) & a, k ) )
            return broken( { { "c(A)&A", o( a ) & a }, { "k", k } } );
        return std::nullopt;
    case P::contraction_conjunctive_overlap:
        if ( !sub( o( a & b ), o( a ) | o( b ) ) )
            return broken( { { "c(A&B)", o( a & b ) }, { "c(A)|c(B)", o( a ) | o( b ) } } );
        return std::nullopt;
    case P::contraction_conjunctive_inclusion:
        if ( !sub( o( a & b ), a ) && !sub( o( a ), o( a & b ) ) )
            return broken( { { "c(A)", o( a ) }, { "c(A&B)", o( a & b ) } } );
        return std::nullopt;

    case P::consistency_preservation:
        if ( k != 0 && o( a ) == 0 )
            return broken( { { "o(A)", 0 } } );
        return std::nullopt;
    case P::confirmation:
        if ( sub( k, a ) && o( a ) != k )
            return broken( { { "o(A)", o( a ) }, { "k", k } } );
        return std::nullopt;
    case P::strict_improvement:
        if ( sub( o( a ), a ) && sub( a, b ) && !sub( o( b ), b ) )
            return broken( { { "o(B)", o( b ) }, { "B", b } } );
        return std::nullopt;
    case P::regularity:
        if ( sub( o( a ), b ) && !sub( o( b ), b ) )
            return broken( { { "o(B)", o( b ) }, { "B", b } } );
        return std::nullopt;
    case P::disjunctive_distribution:
        if ( sub( o( a | b ), a | b ) && !sub( o( a ), a ) && !sub( o( b ), b ) )
            return broken( { { "o(A)", o( a ) }, { "o(B)", o( b ) } } );
        return std::nullopt;
    case P::n_recovery:
        if ( !sub( o( a ) & ( m & ~a ), k ) )
            return broken( { { "o(A)&-A", o( a ) & ( m & ~a ) }, { "k", k } } );
        return std::nullopt;
    case P::n_relative_success:
        if ( ( o( a ) & a ) == 0 && o( a ) != k )
            return broken( { { "o(A)", o( a ) }, { "k", k } } );
        return std::nullopt;
    case P::n_persistence:
        if ( ( o( b ) & b ) == 0 && ( o( a ) & b ) != 0 )
            return broken( { { "o(A)&B", o( a ) & b } } );
        return std::nullopt;
    case P::n_success_propagation:
        if ( ( o( a ) & a ) == 0 && sub( b, a ) && ( o( b ) & b ) != 0 )
            return broken( { { "o(B)&B", o( b ) & b } } );
        return std::nullopt;
    case P::weak_relative_success:
        if ( !sub( o( a ), a ) && !sub( k, o( a ) ) )
            return broken( { { "o(A)", o( a ) }, { "A", a }, { "k", k } } );
        return std::nullopt;
    case P::weak_vacuity:
        if ( ( k & a ) != 0 && !sub( o( a ), k ) )
            return broken( { { "o(A)", o( a ) }, { "k", k } } );
        return std::nullopt;
    case P::weak_disjunctive_inclusion:
        if ( ( o( a | b ) & a ) != 0 && !sub( o( a ) & a, o( a | b ) & ( a | b ) ) )
            return broken( { { "o(A)&A", o( a ) & a }, { "o(A|B)&(A|B)", o( a | b ) & ( a | b ) } } );
        return std::nullopt;
    case P::containment:
        if ( k != 0 && !sub( o( a ), k | ( o( a ) & a ) ) )
            return broken( { { "o(A)", o( a ) }, { "k|(o(A)&A)", k | ( o( a ) & a ) } } );
        return std::nullopt;

    case P::single_sentence_closure: {
        const auto& c = credible_of( p, ctx );
        if ( c.contains( a ) && sub( a, b ) && !c.contains( b ) )
            return broken( { { "A", a }, { "B", b } } );
        return std::nullopt;
    }
    case P::element_consistency: {
        const auto& c = credible_of( p, ctx );
        if ( a == 0 && c.contains( a ) )
            return broken( { { "A", a } } );
        return std::nullopt;
    }
    case P::credibility_lower_bounding: {
        const auto& c = credible_of( p, ctx );
        if ( k != 0 && sub( k, a ) && !c.contains( a ) )
            return broken( { { "A", a }, { "k", k } } );
        return std::nullopt;
    }
    case P::condition_c_star: {
        const auto& c = credible_of( p, ctx );
        if ( !c.contains( a ) && c.contains( b ) && ( o( b ) & a ) != 0 )
            return broken( { { "r(B)&A", o( b ) & a } } );
        return std::nullopt;
    }
    }
    throw std::logic_error( "unhandled postulate" );
}

} // namespace

std::span< const PostulateInfo > catalog() { return catalog_rows; }

std::string to_string( const Witness& w )
{
    std::string out = "a=" + hex( w.alpha );
    if ( w.beta )
        out += " b=" + hex( *w.beta );
    out += " [";
    for ( std::size_t i = 0; i < w.sides.size(); ++i ) {
        if ( i != 0 )
            out += ", ";
        out += w.sides[ i ].label + "=" + hex( w.sides[ i ].value );
    }
    out += "]";
    if ( !w.detail.empty() )
        out += " " + w.detail;
    return out;
}

const PostulateInfo& info( Postulate p ) { return catalog_rows[ static_cast< std::size_t >( p ) ]; }

UnknownPostulate::UnknownPostulate( std::string_view name )
    : std::invalid_argument{ "unknown postulate '" + std::string( name ) + "'" }
{
}

std::optional< Postulate > find_postulate( std::string_view name )
{
    for ( const auto& row : catalog_rows )
        if ( row.name == name )
            return row.id;
    return std::nullopt;
}

Postulate parse_postulate( std::string_view name )
{
    if ( auto p = find_postulate( name ) )
        return *p;
    throw UnknownPostulate( name );
}

std::span< const Postulate > representation_suite() { return representation_ids; }
std::span< const Postulate > revision_postulates() { return revision_ids; }
std::span< const Postulate > contraction_postulates() { return contraction_ids; }
std::span< const Postulate > two_level_postulates() { return two_level_ids; }

std::optional< std::vector< Side > > violation_at( Postulate p, const ExtensionalOperator& op, const CheckContext& ctx,
                                                   PropCode alpha, PropCode beta )
{
    return violation( p, op, ctx, alpha, beta, nullptr );
}

Verdict check( Postulate p, const ExtensionalOperator& op, const CheckContext& ctx )
{
    const auto& row = info( p );
    if ( row.needs_credible )
        credible_of( p, ctx );
    if ( row.vacuous )
        return { true, std::nullopt, "vacuous by representation" };

    const auto size = static_cast< PropCode >( op.size() );
    for ( PropCode a = 0; a < size; ++a ) {
        if ( row.arity == 1 ) {
            std::string detail;
            if ( auto sides = violation( p, op, ctx, a, 0, &detail ) )
                return { false, Witness{ a, std::nullopt, std::move( *sides ), std::move( detail ) }, {} };
            continue;
        }
        for ( PropCode b = 0; b < size; ++b ) {
            if ( auto sides = violation( p, op, ctx, a, b, nullptr ) )
                return { false, Witness{ a, b, std::move( *sides ), {} }, {} };
        }
    }
    return {};
}

Verdict check_condition_c_star( const PropositionSet& credible, const ExtensionalOperator& star )
{
    CheckContext ctx;
    ctx.credible = credible;
    return check( Postulate::condition_c_star, star, ctx );
}

bool SuiteReport::pass() const
{
    return std::all_of( results.begin(), results.end(), []( const auto& r ) { return r.second.pass; } );
}

std::vector< Postulate > SuiteReport::failures() const
{
    std::vector< Postulate > out;
    for ( const auto& [ id, verdict ] : results )
        if ( !verdict.pass )
            out.push_back( id );
    return out;
}

SuiteReport check_suite( std::span< const Postulate > ids, const ExtensionalOperator& op, const CheckContext& ctx )
{
    SuiteReport report;
    for ( auto id : ids )
        report.results.emplace_back( id, check( id, op, ctx ) );
    return report;
}

std::vector< Formula > equivalent_variants( const Proposition& p, const Signature& sig )
{
    const auto d = canonical_formula( p, sig );
    const auto x = Formula::atom( 0 );

    // Minterms in decreasing world order.
    Formula reversed = conjunction( d, d );
    if ( p.count() >= 2 && !p.full() ) {
        auto worlds = p.worlds();
        std::optional< Formula > acc;
        for ( auto it = worlds.rbegin(); it != worlds.rend(); ++it ) {
            auto minterm = canonical_formula( Proposition::from_worlds( p.world_count(), { *it } ), sig );
            acc = acc ? disjunction( std::move( *acc ), std::move( minterm ) ) : std::move( minterm );
        }
        reversed = *acc;
    }

    // Conjunction of clauses ruling out each non-member world.
    Formula cnf = Formula::top();
    {
        std::optional< Formula > acc;
        for ( World w : p.complement().worlds() ) {
            auto clause =
                negation( canonical_formula( Proposition::from_worlds( p.world_count(), { w } ), sig ) );
            acc = acc ? conjunction( std::move( *acc ), std::move( clause ) ) : std::move( clause );
        }
        if ( acc )
            cnf = *acc;
    }

    return {
        d,
        negation( negation( d ) ),
        conjunction( d, Formula::top() ),
        disjunction( Formula::bottom(), d ),
        disjunction( d, d ),
        implication( Formula::top(), d ),
        equivalence( d, Formula::top() ),
        implication( negation( d ), Formula::bottom() ),
        conjunction( disjunction( d, x ), disjunction( d, negation( x ) ) ),
        reversed,
        negation( canonical_formula( p.complement(), sig ) ),
        cnf,
    };
}

namespace {

constexpr P obs1a_premises[] = { P::closure, P::consistency_preservation, P::weak_relative_success, P::n_recovery };
constexpr P obs1b_premises[] = { P::weak_vacuity, P::inclusion };
constexpr P obs2a_premises[] = { P::consistency_preservation, P::closure,          P::vacuity,
                                 P::inclusion,                P::strict_improvement, P::disjunctive_inclusion,
                                 P::disjunctive_overlap,      P::n_recovery };
constexpr P obs2b_premises[] = { P::consistency_preservation, P::closure, P::vacuity, P::weak_relative_success,
                                 P::disjunctive_inclusion };
constexpr P obs2c_premises[] = { P::n_recovery, P::closure };

template < std::size_t N >
std::vector< Postulate > to_vector( const P ( &ids )[ N ] )
{
    return { ids, ids + N };
}

} // namespace

std::span< const Implication > observations()
{
    static const std::vector< Implication > rows = {
        { "1a: -> n-relative-success", to_vector( obs1a_premises ), P::n_relative_success },
        { "1b: -> confirmation", to_vector( obs1b_premises ), P::confirmation },
        { "2a: -> regularity", to_vector( obs2a_premises ), P::regularity },
        { "2b: -> disjunctive-distribution", to_vector( obs2b_premises ), P::disjunctive_distribution },
        { "2c: -> containment", to_vector( obs2c_premises ), P::containment },
    };
    return rows;
}

ImplicationVerdict check_implication( const Implication& imp, const ExtensionalOperator& op, const CheckContext& ctx )
{
    ImplicationVerdict out;
    out.premises_hold = std::all_of( imp.premises.begin(), imp.premises.end(),
                                     [ & ]( Postulate p ) { return check( p, op, ctx ).pass; } );
    auto conclusion = check( imp.conclusion, op, ctx );
    out.conclusion_holds = conclusion.pass;
    out.witness = std::move( conclusion.witness );
    return out;
}

} // namespace srev

#include "cli.hpp"

#include "srev/harness.hpp"
#include "srev/io.hpp"
#include "srev/operators.hpp"
#include "srev/postulates.hpp"
#include "srev/spheres.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace srev::cli {

namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void print_result( std::ostream& out, const Proposition& p, const Signature& sig )
{
    out << "mask: " << p.to_hex() << "\n";
    out << "worlds: " << world_list( p, sig ) << "\n";
    out << "dnf: " << to_string( canonical_formula( p, sig ), sig ) << "\n";
}

TwoLevelSystem checked_two_level( const io::SystemFile& file )
{
    auto t = file.two_level();
    if ( auto verdict = validate_system( t ); !verdict )
        throw InputError( "invalid two-level system: " + verdict.failure );
    return t;
}

std::string default_op( const io::SystemFile& file ) { return file.cutoff ? "two-level" : "grove"; }

// ---------------------------------------------------------------------------

struct ReviseArgs
{
    std::string system;
    std::string formula;
    std::string op;
};

int cmd_revise( const ReviseArgs& a, std::ostream& out )
{
    auto file = io::read_system_file( a.system );
    auto f = parse_formula( a.formula, file.sig );
    auto op = a.op.empty() ? default_op( file ) : a.op;
    if ( op == "grove" ) {
        print_result( out, grove_revise( file.full(), f ), file.sig );
        return exit_pass;
    }
    auto t = checked_two_level( file );
    auto outcome = two_level_outcome( t, models( f, file.sig ) );
    print_result( out, outcome.result, file.sig );
    out << "case: " << to_string( outcome.which ) << "\n";
    return exit_pass;
}

struct FormulaArgs
{
    std::string system;
    std::string formula;
};

int cmd_contract( const FormulaArgs& a, std::ostream& out )
{
    auto file = io::read_system_file( a.system );
    auto f = parse_formula( a.formula, file.sig );
    print_result( out, grove_contract( file.full(), f ), file.sig );
    return exit_pass;
}

int cmd_expand( const FormulaArgs& a, std::ostream& out )
{
    auto file = io::read_system_file( a.system );
    auto f = parse_formula( a.formula, file.sig );
    print_result( out, expand( file.two_level().center(), f, file.sig ), file.sig );
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct OperatorArgs
{
    std::string system;
    std::string table;
    std::string op;
};

ExtensionalOperator load_operator( const OperatorArgs& a )
{
    if ( a.system.empty() == a.table.empty() )
        throw InputError( "give exactly one of --system or --table" );
    if ( !a.table.empty() ) {
        if ( !a.op.empty() )
            throw InputError( "--op only applies to --system" );
        return io::read_table_file( a.table );
    }
    auto file = io::read_system_file( a.system );
    if ( file.sig.size() > max_table_atoms )
        throw InputError( "operator tables support at most " + std::to_string( max_table_atoms ) + " atoms" );
    auto op = a.op.empty() ? default_op( file ) : a.op;
    if ( op == "two-level" )
        return table_of( checked_two_level( file ) );
    if ( op == "grove" )
        return revision_table( file.full() );
    return contraction_table( file.full() );
}

std::vector< Postulate > selected_postulates( const std::string& name )
{
    auto from = []( std::span< const Postulate > ids ) { return std::vector< Postulate >( ids.begin(), ids.end() ); };
    if ( name == "representation" )
        return from( representation_suite() );
    if ( name == "two-level" )
        return from( two_level_postulates() );
    if ( name == "revision" )
        return from( revision_postulates() );
    if ( name == "contraction" )
        return from( contraction_postulates() );
    return { parse_postulate( name ) };
}

std::string postulate_names()
{
    std::string out = "representation, two-level, revision, contraction";
    for ( const auto& row : catalog() )
        out += ", " + std::string( row.name );
    return out;
}

const char* family_name( PostulateFamily f )
{
    switch ( f ) {
    case PostulateFamily::revision:
        return "revision";
    case PostulateFamily::contraction:
        return "contraction";
    case PostulateFamily::two_level:
        return "two-level";
    case PostulateFamily::credibility:
        return "credibility";
    case PostulateFamily::relational:
        return "relational";
    }
    return "";
}

int cmd_list( const std::string& format, std::ostream& out )
{
    if ( format == "json" ) {
        json rows = json::array();
        for ( const auto& row : catalog() )
            rows.push_back( { { "name", row.name },
                              { "label", row.label },
                              { "family", family_name( row.family ) },
                              { "arity", row.arity },
                              { "sentence_form", row.sentence_form },
                              { "world_form", row.world_form } } );
        out << rows.dump( 2 ) << "\n";
        return exit_pass;
    }
    for ( const auto& row : catalog() ) {
        out << row.name << " " << row.label << " [" << family_name( row.family ) << "]\n";
        out << "    " << row.sentence_form << "\n";
        out << "    " << row.world_form << "\n";
    }
    return exit_pass;
}

struct CheckArgs
{
    OperatorArgs source;
    std::string postulate;
    std::string credible = "any";
    std::string format = "text";
    bool list = false;
};

int cmd_check( const CheckArgs& a, std::ostream& out )
{
    if ( a.list )
        return cmd_list( a.format, out );
    if ( a.postulate.empty() )
        throw InputError( "--postulate is required (one of: " + postulate_names() + ")" );
    std::vector< Postulate > ids;
    try {
        ids = selected_postulates( a.postulate );
    } catch ( const UnknownPostulate& e ) {
        throw InputError( std::string( e.what() ) + "; valid names: " + postulate_names() );
    }
    auto op = load_operator( a.source );

    CheckContext ctx;
    if ( std::any_of( ids.begin(), ids.end(), []( Postulate p ) { return info( p ).needs_credible; } ) ) {
        auto cred = extract_revision_and_credibility( op ).credibility;
        ctx.credible = a.credible == "high" ? cred.high : a.credible == "low" ? cred.low : cred.credible();
    }
    auto report = check_suite( ids, op, ctx );

    const auto& sig = op.sig();
    const auto n = sig.world_count();
    if ( a.format == "json" ) {
        json results = json::array();
        for ( const auto& [ id, v ] : report.results ) {
            json row = { { "postulate", info( id ).name }, { "pass", v.pass } };
            if ( v.witness ) {
                json sides = json::object();
                for ( const auto& s : v.witness->sides )
                    sides[ s.label ] = Proposition::from_code( n, s.value ).to_hex();
                row[ "witness" ] = { { "alpha", Proposition::from_code( n, v.witness->alpha ).to_hex() },
                                     { "beta", v.witness->beta
                                                   ? json( Proposition::from_code( n, *v.witness->beta ).to_hex() )
                                                   : json( nullptr ) },
                                     { "sides", std::move( sides ) },
                                     { "detail", v.witness->detail } };
            }
            if ( !v.note.empty() )
                row[ "note" ] = v.note;
            results.push_back( std::move( row ) );
        }
        out << json{ { "results", std::move( results ) }, { "pass", report.pass() } }.dump( 2 ) << "\n";
    } else {
        std::size_t failed = 0;
        for ( const auto& [ id, v ] : report.results ) {
            out << describe( id, v );
            if ( v.witness ) {
                ++failed;
                out << "  A=" << world_list( Proposition::from_code( n, v.witness->alpha ), sig );
                if ( v.witness->beta )
                    out << " B=" << world_list( Proposition::from_code( n, *v.witness->beta ), sig );
            }
            out << "\n";
        }
        out << "summary: " << report.results.size() - failed << " pass, " << failed << " fail\n";
    }
    return report.pass() ? exit_pass : exit_counterexample;
}

// ---------------------------------------------------------------------------

struct EnumerationArgs
{
    std::size_t atoms = 1;
    std::string mode = "exhaustive";
    std::optional< std::uint64_t > seed;
    std::size_t count = 1000;
    std::string k;
    std::uint32_t levels = default_sample_levels;
};

EnumerationSpec to_spec( const EnumerationArgs& a )
{
    static const char* names[] = { "p", "q", "r" };
    if ( a.atoms < 1 || a.atoms > max_sample_atoms )
        throw InputError( "--atoms must be between 1 and " + std::to_string( max_sample_atoms ) );
    std::vector< std::string > atoms( names, names + a.atoms );
    EnumerationSpec spec{ Signature( atoms ), std::nullopt, EnumerationMode::exhaustive, a.count, a.seed, a.levels };
    spec.mode = a.mode == "sample" ? EnumerationMode::sample : EnumerationMode::exhaustive;
    if ( a.k.empty() ) {
        std::string all = atoms.front();
        for ( std::size_t i = 1; i < atoms.size(); ++i )
            all += "&" + atoms[ i ];
        spec.k = models( parse_formula( all, spec.sig ), spec.sig );
    } else if ( a.k != "all" ) {
        spec.k = io::parse_k( a.k, spec.sig );
    }
    validate_spec( spec );
    return spec;
}

struct TheoremArgs
{
    EnumerationArgs enumeration;
    std::string format = "text";
    bool grove = false;
};

int cmd_verify_theorem( const TheoremArgs& a, std::ostream& out )
{
    auto spec = to_spec( a.enumeration );
    const auto threads = default_threads();
    auto report = verify_theorem( spec, threads );
    bool pass = report.pass();

    std::optional< GroveReport > grove;
    if ( a.grove ) {
        grove = verify_grove( spec, threads );
        pass = pass && grove->pass();
    }

    if ( a.format == "json" ) {
        auto doc = json::parse( to_json( report ) );
        if ( grove ) {
            json failing = json::array();
            for ( const auto& rec : grove->failing )
                failing.push_back( { { "system", json::parse( rec.system ) }, { "failures", rec.failures } } );
            doc[ "grove" ] = { { "systems", grove->systems },
                               { "revision_failures", grove->revision_failures },
                               { "contraction_failures", grove->contraction_failures },
                               { "levi_harper_failures", grove->levi_harper_failures },
                               { "counterexamples", std::move( failing ) },
                               { "pass", grove->pass() } };
            doc[ "pass" ] = pass;
        }
        out << doc.dump( 2 ) << "\n";
        return pass ? exit_pass : exit_counterexample;
    }

    auto text = to_text( report );
    if ( grove ) {
        // Keep the overall verdict as the last line.
        text.erase( text.rfind( "result: " ) );
        std::ostringstream g;
        g << "grove systems: " << grove->systems << "\n";
        g << "grove revision: " << ( grove->revision_failures == 0 ? "PASS" : "FAIL" ) << " "
          << grove->systems - grove->revision_failures << "/" << grove->systems << "\n";
        g << "grove contraction: " << ( grove->contraction_failures == 0 ? "PASS" : "FAIL" ) << " "
          << grove->systems - grove->contraction_failures << "/" << grove->systems << "\n";
        g << "levi/harper identities: " << ( grove->levi_harper_failures == 0 ? "PASS" : "FAIL" ) << " "
          << grove->systems - grove->levi_harper_failures << "/" << grove->systems << "\n";
        for ( const auto& rec : grove->failing ) {
            g << "counterexample " << rec.system << "\n";
            for ( const auto& f : rec.failures )
                g << "  " << f << "\n";
        }
        text += g.str() + "result: " + ( pass ? "PASS" : "FAIL" ) + "\n";
    }
    out << text;
    return pass ? exit_pass : exit_counterexample;
}

struct EnumerateArgs
{
    EnumerationArgs enumeration;
    bool grove = false;
};

int cmd_enumerate( const EnumerateArgs& a, std::ostream& out )
{
    auto spec = to_spec( a.enumeration );
    if ( a.grove ) {
        for ( const auto& g : enumerate_grove_systems( spec ) )
            out << io::write_system( g ) << "\n";
    } else {
        for ( const auto& t : enumerate_systems( spec ) )
            out << io::write_system( t ) << "\n";
    }
    return exit_pass;
}

// ---------------------------------------------------------------------------

std::string members( const PropositionSet& set, std::size_t n )
{
    std::string out;
    for ( auto p : set.members() )
        out += ( out.empty() ? "" : " " ) + Proposition::from_code( n, p ).to_hex();
    return out.empty() ? "(none)" : out;
}

int cmd_roundtrip( const OperatorArgs& a, std::ostream& out )
{
    auto odot = load_operator( a );
    auto suite = check_suite( representation_suite(), odot );
    if ( !suite.pass() ) {
        out << "suite: FAIL\n";
        for ( const auto& [ id, v ] : suite.results )
            if ( !v.pass )
                out << "  " << describe( id, v ) << "\n";
        out << "not applicable: the table does not satisfy the representation postulates\n";
        return exit_counterexample;
    }
    out << "suite: PASS\n";

    auto built = construct_spheres( odot );
    if ( auto* t = std::get_if< TwoLevelSystem >( &built ) )
        out << "constructed: " << io::write_system( *t ) << "\n";
    auto cred = extract_revision_and_credibility( odot ).credibility;
    const auto n = odot.world_count();
    out << "C_H: " << members( cred.high, n ) << "\n";
    out << "C_L: " << members( cred.low, n ) << "\n";

    auto to_two = verify_direction_1_to_2( odot );
    auto to_three = verify_direction_1_to_3( odot );
    for ( const auto& [ name, r ] : { std::pair{ "1->2", &to_two }, std::pair{ "1->3", &to_three } } ) {
        out << "direction " << name << ": " << ( r->pass ? "PASS" : "FAIL" ) << "\n";
        for ( const auto& f : r->failures )
            out << "  " << f << "\n";
    }
    return to_two.pass && to_three.pass ? exit_pass : exit_counterexample;
}

} // namespace

int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Belief revision with spheres and two-level credibility-limited revision", "spheres-rev" };
    app.require_subcommand( 1 );
    app.set_help_all_flag( "--help-all", "Show help for every subcommand" );

    const std::vector< std::string > ops = { "grove", "two-level" };
    const std::vector< std::string > check_ops = { "grove", "two-level", "contraction" };
    const std::vector< std::string > formats = { "text", "json" };

    ReviseArgs revise;
    auto* revise_cmd = app.add_subcommand( "revise", "Revise the center of a system by a formula" );
    revise_cmd->add_option( "--system", revise.system, "System file" )->required();
    revise_cmd->add_option( "--formula", revise.formula, "Input formula" )->required();
    revise_cmd->add_option( "--op", revise.op, "grove or two-level (default: two-level if the file has a cutoff)" )
        ->check( CLI::IsMember( ops ) );

    FormulaArgs contract;
    auto* contract_cmd = app.add_subcommand( "contract", "Sphere-based contraction of a full system's center" );
    contract_cmd->add_option( "--system", contract.system, "System file" )->required();
    contract_cmd->add_option( "--formula", contract.formula, "Formula to give up" )->required();

    FormulaArgs expand_args;
    auto* expand_cmd = app.add_subcommand( "expand", "Expansion of a system's center" );
    expand_cmd->add_option( "--system", expand_args.system, "System file" )->required();
    expand_cmd->add_option( "--formula", expand_args.formula, "Formula to add" )->required();

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand( "check", "Check postulates on an operator" );
    check_cmd->add_option( "--system", check_args.source.system, "System file" );
    check_cmd->add_option( "--table", check_args.source.table, "Operator table file" );
    check_cmd->add_option( "--op", check_args.source.op, "Operator built from --system" )
        ->check( CLI::IsMember( check_ops ) );
    check_cmd->add_option( "--postulate", check_args.postulate,
                           "Postulate name, or representation | two-level | revision | contraction" );
    check_cmd->add_option( "--credible", check_args.credible, "Credible set for credibility postulates" )
        ->check( CLI::IsMember( { "high", "low", "any" } ) );
    check_cmd->add_option( "--format", check_args.format, "Output format" )->check( CLI::IsMember( formats ) );
    check_cmd->add_flag( "--list", check_args.list, "Print the postulate catalog" );

    auto add_enumeration = []( CLI::App* cmd, EnumerationArgs& e ) {
        cmd->add_option( "--atoms", e.atoms, "Number of atoms (p, q, r)" )->required();
        cmd->add_option( "--mode", e.mode, "exhaustive or sample" )
            ->check( CLI::IsMember( { "exhaustive", "sample" } ) );
        cmd->add_option( "--seed", e.seed, "Seed for sample mode" );
        cmd->add_option( "--count", e.count, "Number of samples" );
        cmd->add_option( "--k", e.k, "Center: all, a 0x bitmask or a formula (default: every atom true)" );
        cmd->add_option( "--levels", e.levels, "Maximum number of levels in sample mode" );
    };

    TheoremArgs theorem;
    auto* theorem_cmd = app.add_subcommand( "verify-theorem", "Verify the representation theorem end to end" );
    add_enumeration( theorem_cmd, theorem.enumeration );
    theorem_cmd->add_option( "--format", theorem.format, "Output format" )->check( CLI::IsMember( formats ) );
    theorem_cmd->add_flag( "--grove", theorem.grove, "Also check Grove revision, contraction and Levi/Harper" );

    OperatorArgs roundtrip;
    auto* roundtrip_cmd = app.add_subcommand( "roundtrip", "Rebuild spheres and credibility sets from an operator" );
    roundtrip_cmd->add_option( "--system", roundtrip.system, "System file" );
    roundtrip_cmd->add_option( "--table", roundtrip.table, "Operator table file" );
    roundtrip_cmd->add_option( "--op", roundtrip.op, "Operator built from --system" )
        ->check( CLI::IsMember( check_ops ) );

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand( "enumerate", "List canonical systems, one JSON object per line" );
    add_enumeration( enumerate_cmd, enumerate.enumeration );
    enumerate_cmd->add_flag( "--grove", enumerate.grove, "Full Grove systems only" );

    try {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    } catch ( const CLI::CallForHelp& ) {
        out << app.help();
        return exit_pass;
    } catch ( const CLI::CallForAllHelp& ) {
        out << app.help( "", CLI::AppFormatMode::All );
        return exit_pass;
    } catch ( const CLI::ParseError& e ) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if ( *revise_cmd )
            return cmd_revise( revise, out );
        if ( *contract_cmd )
            return cmd_contract( contract, out );
        if ( *expand_cmd )
            return cmd_expand( expand_args, out );
        if ( *check_cmd )
            return cmd_check( check_args, out );
        if ( *theorem_cmd )
            return cmd_verify_theorem( theorem, out );
        if ( *roundtrip_cmd )
            return cmd_roundtrip( roundtrip, out );
        if ( *enumerate_cmd )
            return cmd_enumerate( enumerate, out );
    } catch ( const std::exception& e ) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace srev::cli

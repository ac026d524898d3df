#include "srev/logic.hpp"

#include <cctype>

namespace srev {

ParseError::ParseError( Kind kind, std::size_t offset, const std::string& what )
    : std::runtime_error{ what }, kind_{ kind }, offset_{ offset }
{
}

namespace {

enum class Tok
{
    ident,
    kw_true,
    kw_false,
    neg,
    conj,
    disj,
    imp,
    iff,
    lparen,
    rparen,
    end,
};

struct Token
{
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

struct UnicodeAlias
{
    std::string_view bytes;
    Tok kind;
};

constexpr UnicodeAlias unicode_aliases[] = {
    { "\xC2\xAC", Tok::neg },      // ¬
    { "\xE2\x88\xA7", Tok::conj }, // ∧
    { "\xE2\x88\xA8", Tok::disj }, // ∨
    { "\xE2\x86\x92", Tok::imp },  // →
    { "\xE2\x86\x94", Tok::iff },  // ↔
};

std::string describe( const Token& t )
{
    if ( t.kind == Tok::end )
        return "end of input";
    return "'" + std::string( t.text ) + "'";
}

class Lexer
{
public:
    explicit Lexer( std::string_view text ) : text_{ text } {}

    Token next()
    {
        while ( pos_ < text_.size() && std::isspace( static_cast< unsigned char >( text_[ pos_ ] ) ) )
            ++pos_;
        const auto start = pos_;
        if ( pos_ == text_.size() )
            return { Tok::end, start, {} };

        const auto rest = text_.substr( pos_ );
        for ( const auto& alias : unicode_aliases ) {
            if ( rest.starts_with( alias.bytes ) ) {
                pos_ += alias.bytes.size();
                return { alias.kind, start, alias.bytes };
            }
        }
        if ( rest.starts_with( "<->" ) ) {
            pos_ += 3;
            return { Tok::iff, start, rest.substr( 0, 3 ) };
        }
        if ( rest.starts_with( "->" ) ) {
            pos_ += 2;
            return { Tok::imp, start, rest.substr( 0, 2 ) };
        }

        const char c = text_[ pos_ ];
        auto single = [ & ]( Tok kind ) {
            ++pos_;
            return Token{ kind, start, rest.substr( 0, 1 ) };
        };
        switch ( c ) {
        case '~':
            return single( Tok::neg );
        case '&':
            return single( Tok::conj );
        case '|':
            return single( Tok::disj );
        case '(':
            return single( Tok::lparen );
        case ')':
            return single( Tok::rparen );
        default:
            break;
        }

        if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' ) {
            while ( pos_ < text_.size()
                    && ( std::isalnum( static_cast< unsigned char >( text_[ pos_ ] ) ) || text_[ pos_ ] == '_' ) )
                ++pos_;
            auto word = text_.substr( start, pos_ - start );
            if ( word == "true" )
                return { Tok::kw_true, start, word };
            if ( word == "false" )
                return { Tok::kw_false, start, word };
            return { Tok::ident, start, word };
        }
        throw ParseError( ParseError::Kind::syntax, start,
                          "syntax error at offset " + std::to_string( start ) + ": unexpected character '"
                              + std::string( 1, c ) + "'" );
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser
{
public:
    Parser( std::string_view text, const Signature& sig ) : lexer_{ text }, sig_{ sig } { advance(); }

    Formula parse()
    {
        auto f = equivalence_level();
        if ( current_.kind != Tok::end )
            fail( "expected end of input, found " + describe( current_ ) );
        return f;
    }

private:
    void advance() { current_ = lexer_.next(); }

    [[noreturn]] void fail( const std::string& what ) const
    {
        throw ParseError( ParseError::Kind::syntax, current_.offset,
                          "syntax error at offset " + std::to_string( current_.offset ) + ": " + what );
    }

    Formula equivalence_level()
    {
        auto lhs = implication_level();
        while ( current_.kind == Tok::iff ) {
            advance();
            lhs = equivalence( std::move( lhs ), implication_level() );
        }
        return lhs;
    }

    Formula implication_level()
    {
        auto lhs = disjunction_level();
        if ( current_.kind == Tok::imp ) {
            advance();
            return implication( std::move( lhs ), implication_level() );
        }
        return lhs;
    }

    Formula disjunction_level()
    {
        auto lhs = conjunction_level();
        while ( current_.kind == Tok::disj ) {
            advance();
            lhs = disjunction( std::move( lhs ), conjunction_level() );
        }
        return lhs;
    }

    Formula conjunction_level()
    {
        auto lhs = unary();
        while ( current_.kind == Tok::conj ) {
            advance();
            lhs = conjunction( std::move( lhs ), unary() );
        }
        return lhs;
    }

    Formula unary()
    {
        if ( current_.kind == Tok::neg ) {
            advance();
            return negation( unary() );
        }
        return primary();
    }

    Formula primary()
    {
        const auto tok = current_;
        switch ( tok.kind ) {
        case Tok::kw_true:
            advance();
            return Formula::top();
        case Tok::kw_false:
            advance();
            return Formula::bottom();
        case Tok::ident: {
            auto index = sig_.index_of( tok.text );
            if ( !index )
                throw ParseError( ParseError::Kind::undeclared_atom, tok.offset,
                                  "undeclared atom '" + std::string( tok.text ) + "' at offset "
                                      + std::to_string( tok.offset ) );
            advance();
            return Formula::atom( *index );
        }
        case Tok::lparen: {
            advance();
            auto inner = equivalence_level();
            if ( current_.kind != Tok::rparen )
                fail( "expected ')', found " + describe( current_ ) );
            advance();
            return inner;
        }
        default:
            fail( "expected a formula, found " + describe( tok ) );
        }
    }

    Lexer lexer_;
    const Signature& sig_;
    Token current_{ Tok::end, 0, {} };
};

} // namespace

Formula parse_formula( std::string_view text, const Signature& sig ) { return Parser( text, sig ).parse(); }

} // namespace srev

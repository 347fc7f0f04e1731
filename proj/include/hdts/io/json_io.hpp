#pragma once

#include "hdts/core/weak_hdts.hpp"
#include "hdts/precub/precub_set.hpp"

#include <json.hpp>

#include <filesystem>

namespace hdts::io
{

using json = nlohmann::ordered_json;

// Unreadable or invalid input. Malformed input (I/O failure, JSON syntax) is
// told apart from well-formed input describing an invalid object. `line` is
// 1-based, 0 when unknown.
class load_error : public error
{
public:
    explicit load_error( const std::string& what, std::size_t line = 0, bool malformed = false )
            : error( line ? "line " + std::to_string( line ) + ": " + what : what ), _line{ line }, _malformed{ malformed }
    {
    }

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] bool malformed() const { return _malformed; }

private:
    std::size_t _line;
    bool _malformed;
};

// Parses a JSON document, reporting the line of a syntax error.
json parse_json( const std::string& text );
json read_json_file( const std::filesystem::path& path );

enum class document_kind
{
    hdts,
    precub,
    hdts_map,
    precub_map,
};

std::string to_string( document_kind k );

// A map document has "state_map" or "cell_map"; a precubical set has
// "cells"; anything else is read as a system.
document_kind kind_of( const json& j );

// {"sigma":[..], "states":[..], "actions":[{"id","label"}],
//  "transitions":[{"from","actions":[..],"to"}]}. Transition action lists are
// sorted into canonical order, then the system is validated, closure under
// the composition axiom included.
hdts_ptr hdts_from_json( const json& j, const budget& b = {} );
json to_json( const weak_hdts& x );

// {"sigma":[..], "dim_bound":n, "cells":{"0":[{"id"}], "1":[{"id","label":[..],
//  "d":{"1,0":id,"1,1":id}}], "2":[{.., "s":{"1":id}}], ...}}; validated as a
// presheaf.
precub_ptr precub_from_json( const json& j );
json to_json( const precub_set& k );

// {"domain":<system>, "codomain":<system>, "state_map":{name:name},
//  "action_map":{name:name}}. "domain" and "codomain" may also be paths,
// resolved against `base`.
hdts_map hdts_map_from_json( const json& j, const std::filesystem::path& base = {}, const budget& b = {} );
json to_json( const hdts_map& f );

// {"domain", "codomain", "cell_map":{"<dim>":{name:name}}}.
precub_map precub_map_from_json( const json& j, const std::filesystem::path& base = {} );
json to_json( const precub_map& f );

} // namespace hdts::io

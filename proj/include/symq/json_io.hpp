#ifndef SYMQ_JSON_IO_HPP
#define SYMQ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "symq/quandle.hpp"
#include "symq/snf.hpp"

namespace symq {

using Json = nlohmann::ordered_json;

/// Strict parse of {"size": n, "table": [[...], ...]}. Shape and range
/// problems raise FormatError; a well-formed table that breaks a quandle
/// axiom raises Error with the violation list (these two are distinct
/// failure modes).
QuandleTable quandle_from_json(const Json& j);
Json quandle_to_json(const QuandleTable& q);

/// Strict parse of {"rho": [...]} against a quandle of matching size.
/// Raises FormatError for shape problems and Error when ρ is not a good
/// involution of q.
Permutation involution_from_json(const Json& j, const QuandleTable& q);
Json involution_to_json(const Permutation& rho);

QuandleTable load_quandle_file(const std::string& path);
Permutation load_involution_file(const std::string& path,
                                 const QuandleTable& q);

std::string read_file(const std::string& path);  // FormatError if unreadable

Json to_json(const AbelianInvariants& inv);

}  // namespace symq

#endif  // SYMQ_JSON_IO_HPP

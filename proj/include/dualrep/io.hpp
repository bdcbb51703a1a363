#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "dualrep/diffrep.hpp"

namespace dualrep {

/* "F<p>" (odd prime modulus) or "Q"; throws Error("BadField") otherwise. */
Field parse_field_spec(const std::string& spec);

/* Canonical text: a `rep over <field> quiver <name>` header, one
 * `dim <vertex> = <n>` line per vertex, one `map <arrow> = [[..],..]` line
 * per arrow, and (differential modules only) one `eps <vertex> = [[..],..]`
 * line per vertex — all in file order, matrices in the canonical bracket
 * syntax.  print-then-parse is the identity value; parse-then-print is the
 * identity on canonical files. */
std::string print_rep(const Rep& m);
std::string print_diffrep(const DiffRep& m);

/* Readers take the quiver separately; the file only names it (mismatching
 * names are a ParseError).  A file without eps lines parses as a
 * differential module with eps = 0.  Structural invariant violations
 * (eps^2 != 0, eps not commuting) surface as their own error codes, not as
 * parse errors. */
Rep parse_rep(std::istream& in, std::shared_ptr<const Quiver> q);
DiffRep parse_diffrep(std::istream& in, std::shared_ptr<const Quiver> q);
Rep parse_rep_file(const std::string& path, std::shared_ptr<const Quiver> q);
DiffRep parse_diffrep_file(const std::string& path, std::shared_ptr<const Quiver> q);

std::string read_text_file(const std::string& path);  // throws IoError
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dualrep

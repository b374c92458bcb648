#pragma once

#include "symfunc/symfunc.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace symfunc::cli {

// "4,2,1" -> (4,2,1); "" -> (); trailing zeros dropped. Throws ParseError on
// anything that is not a weakly decreasing list of nonnegative integers.
Partition parse_partition(std::string_view text);

// Exit codes: 0 success (or identity holds), 1 identity fails, 2 usage or
// input error. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// {"basis":"m","terms":[{"partition":[1,1],"coeff":"1"}]}
std::string write_symfunc(const SymFunc& f);
SymFunc read_symfunc(std::string_view json_text);

// Accepts any JSON document run() emits, checks it against the shape of its
// kind and returns it re-serialized. kind receives one of symfunc, matrix,
// table, lr, pieri, report. Throws ParseError.
std::string read_document(std::string_view json_text, std::string* kind = nullptr);

}  // namespace symfunc::cli

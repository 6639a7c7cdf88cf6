#pragma once

#include <stdexcept>
#include <string>

#include "cwb/braid.hpp"
#include "cwb/clasper.hpp"
#include "cwb/diagram.hpp"
#include "cwb/magnus.hpp"
#include "cwb/pd.hpp"

namespace cwb {

// malformed or schema-violating input (as opposed to domain errors on
// well-formed data)
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" reads stdin
std::string read_file_or_stdin(const std::string& path);

ClasperGraph clasper_from_json(const std::string& text);
std::string clasper_to_json(const ClasperGraph& g);

Marking marking_from_json(const std::string& text);

BraidWord braid_from_json(const std::string& text);
std::string braid_to_json(const BraidWord& b);

LinkDiagram pd_from_json(const std::string& text);
std::string pd_to_json(const LinkDiagram& d);

std::string mu_table_to_json(const MuTable& t);

std::string utd_to_json(const UTD& d);

}  // namespace cwb

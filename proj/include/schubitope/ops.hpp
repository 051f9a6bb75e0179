#ifndef SCHUBITOPE_OPS_HPP
#define SCHUBITOPE_OPS_HPP

#include <string>

#include "json.hpp"

namespace schub::ops {

using json = nlohmann::ordered_json;

// JSON-level operations behind the C API and the CLI. Every function throws
// input_error on malformed input; documents follow the CLI output schemas.

json diagram(const std::string& kind, const std::string& input, int n);
json theta(const std::string& diagram, int n, const std::string& rows);
json points(const std::string& diagram, int n, int t);
json lattice_free(const std::string& kind, const std::string& input, int n);
json ehrhart(const std::string& kind, const std::string& input, int n);
json poly(const std::string& family, const std::string& input);
json newton(const std::string& family, const std::string& input);
// options: {"n": int, "max_part": int, "max_len": int, "seed": uint64,
//           "jobs": int, "fail_fast": bool, "random_diagrams": int,
//           "timing": bool}; all optional.
json verify(const std::string& suite, const json& options);

}  // namespace schub::ops

#endif

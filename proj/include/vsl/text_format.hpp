#pragma once

// Plain-text formats for VASSes, configurations, semilinear sets and runs.
//
//   dim D
//   state NAME
//   trans SRC DST d1 ... dD
//
// Configurations are `NAME v1 ... vD`. Semilinear sets are blocks of
// `component STATE` / `base ...` / `period ...`. A run is `source NAME v...`
// followed by `path t1 t2 ...`. '#' starts a comment everywhere.

#include "vsl/core.hpp"
#include "vsl/semilinear.hpp"

#include <string>
#include <string_view>

namespace vsl {

Vass parse_vass(std::string_view text);
std::string format_vass(const Vass& vass);

Configuration parse_configuration(const Vass& vass, std::string_view text);
std::string format_configuration(const Vass& vass, const Configuration& c);

SemilinearConfigSet parse_semilinear(const Vass& vass, std::string_view text);
std::string format_semilinear(const Vass& vass, const SemilinearConfigSet& set);

Run parse_run(const Vass& vass, std::string_view text);
std::string format_run(const Vass& vass, const Run& run);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace vsl

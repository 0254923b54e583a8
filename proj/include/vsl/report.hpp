#pragma once

// JSON views of results, shared by the command-line tool and the bindings.

#include "vsl/checker.hpp"
#include "vsl/explore.hpp"
#include "vsl/numtheory.hpp"
#include "vsl/separator.hpp"

#include <json.hpp>

namespace vsl {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Vass& vass, const Configuration& c);
nlohmann::json to_json(const Vass& vass, const Run& run);
nlohmann::json to_json(const Vass& vass, const SemilinearConfigSet& set);
nlohmann::json to_json(const Vass& vass, const ReachVerdict& v);
nlohmann::json to_json(const Vass& vass, const DualVerdict& v);
nlohmann::json to_json(const Vass& vass, const CheckReport& r);
nlohmann::json to_json(const StepPath& path);
nlohmann::json to_json(const IntVec& v);

/// {schema_version, command, ...body}
nlohmann::json envelope(const std::string& command, nlohmann::json body);

}  // namespace vsl

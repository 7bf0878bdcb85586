#pragma once

#include "su2ab/decide.hpp"
#include "su2ab/oracle.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace su2ab {

using json = nlohmann::json;

// Malformed input; `pointer` is the JSON pointer of the offending field.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& pointer, const std::string& what)
        : std::invalid_argument(pointer + ": " + what), pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// {"p": [p1, p2], "q": [q1, q2]}
SeifertPiece piece_from_json(const json& j, const std::string& pointer = "");
// {"m1": {...}, "m2": {...}, "phi": [[alpha, beta], [gamma, delta]]}
GraphManifold manifold_from_json(const json& j);
GraphManifold manifold_from_text(const std::string& text);
GraphManifold read_manifold_file(const std::string& path);

json to_json(const SeifertPiece& s);
json to_json(const GluingMatrix& m);
json to_json(const GraphManifold& M);
json to_json(const TorusPoint& e);
json to_json(const KeyDeltas& k);
json to_json(const CosIntervalSet& s);
json to_json(const RepWitness& w, const Presentation& p);

json verdict_json(const GraphManifold& M, const Verdict& v, const std::optional<ClassId>& c);

}  // namespace su2ab

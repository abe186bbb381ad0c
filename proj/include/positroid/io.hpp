#pragma once

#include "positroid/amplituhedron.hpp"
#include "positroid/cluster.hpp"
#include "positroid/decorated_perm.hpp"
#include "positroid/grassmann.hpp"
#include "positroid/hypersimplex.hpp"
#include "positroid/plabic.hpp"
#include "positroid/triangulation.hpp"
#include "positroid/trop.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace positroid::io {

using Json = nlohmann::ordered_json;

// Malformed input; what() is "<source>:<line>: <message>".
class InputError : public std::runtime_error {
public:
    InputError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Error inside a JSON value, located by a pointer relative to that value.
// Thrown by the *_from_json decoders.
struct FieldError : std::invalid_argument {
    FieldError(std::string where, const std::string& what) : std::invalid_argument(what), pointer(std::move(where)) {}
    std::string pointer;
};

// Parsed JSON with the line on which each value starts, keyed by JSON
// pointer ("" for the root, "/tiles/0/perm", …).
struct Document {
    std::string source;
    Json value;
    std::map<std::string, int> lines;

    int line_of(const std::string& pointer) const;
    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;

    // Runs a decoder on the value at pointer, turning its errors into
    // InputErrors on the right line.
    template <class F>
    auto decode(const std::string& pointer, F&& f) const {
        try {
            return f(pointer.empty() ? value : value.at(Json::json_pointer(pointer)));
        } catch (const FieldError& e) {
            fail(pointer + e.pointer, e.what());
        } catch (const Json::out_of_range&) {
            fail(pointer, "missing value at " + pointer);
        } catch (const std::invalid_argument& e) {
            fail(pointer, e.what());
        }
    }
};
Document parse_document(const std::string& text, const std::string& source);
Document read_document(const std::string& path);

Json to_json(const Rational& x);  // "p/q"
Rational rational_from_json(const Json& j);
Rational parse_rational(const std::string& text);
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const PluckerVector& p);
PluckerVector plucker_from_json(const Json& j);
Json to_json(const DecoratedPermutation& p);
DecoratedPermutation permutation_from_json(const Json& j);
Json to_json(const PlabicGraph& g);
PlabicGraph graph_from_json(const Json& j);
Json to_json(const BicoloredTriangulation& t);
BicoloredTriangulation triangulation_from_json(const Json& j);
Json to_json(const BicoloredSubdivision& s);
BicoloredSubdivision subdivision_from_json(const Json& j);
Json to_json(const HeightVector& h);
HeightVector heights_from_json(const Json& j);
Json to_json(const Subdivision& d);
Json to_json(const Tiling& t);
Json to_json(const TilingReport& r);
Json to_json(const AmpTilingReport& r);
Json to_json(const Seed& s);
Json to_json(const Matroid& m);

// Lists like "1,0,0,2/3" or "(1,0,0)".
std::vector<Rational> parse_rational_list(const std::string& text);
// "vandermonde:0,1,2,3" or "file:<path>" (JSON matrix).
RatMatrix parse_z_spec(const std::string& spec, int n, int p);

}  // namespace positroid::io

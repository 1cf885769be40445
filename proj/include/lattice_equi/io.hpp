#pragma once

#include <string>

#include <json.hpp>

#include "lattice_equi/equidecomposition.hpp"
#include "lattice_equi/geometry.hpp"
#include "lattice_equi/lattice_counting.hpp"
#include "lattice_equi/minimal_triangles.hpp"

namespace lattice_equi {

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws InputError on I/O or syntax errors.
Json load_json_file(const std::string& path);

/// Coordinates are strings "p/q" (plain JSON integers are also accepted).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"vertices": [[x, y], ...]}; a bare vertex array is also accepted.
Json to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

/// {"kind": "triangle" | "segment" | "vertex", "points": [...]}
Json to_json(const OpenCell& c);
OpenCell cell_from_json(const Json& j);
/// {"cells": [...]}
Json to_json(const DeltaComplex& c);
DeltaComplex complex_from_json(const Json& j);
/// A polygon document or a complex document.
Region region_from_json(const Json& j);

Json to_json(const UnimodularMatrix& m);
Json to_json(const GMap& g);

/// {"period": d, "constituents": [[c0, c1, c2], ...]}
Json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipolynomial_from_json(const Json& j);

/// {"pieces": [{"cell", "matrix", "translation"}], "domain", "codomain"}
Json to_json(const EquiRelation& r);
EquiRelation relation_from_json(const Json& j);

/// Generator parameters plus the first k pieces.
Json to_json(const InfiniteRelation& r, std::int64_t k);

/// Vertices, edges with adjacent facets, facets with their edges.
Json to_json(const Triangulation& t);

}  // namespace lattice_equi

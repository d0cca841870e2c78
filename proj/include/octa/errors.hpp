#pragma once

#include <stdexcept>
#include <string>

namespace octa {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A map was evaluated on one of its undefined lines (strip boundaries,
/// edge extensions, cell boundaries of strip-map compositions).
struct UndefinedOnLine : Error {
    explicit UndefinedOnLine(const std::string& what = "point lies on an undefined line")
        : Error(what) {}
};

/// Outer billiards queried at a point inside the table.
struct InsideTable : Error {
    explicit InsideTable(const std::string& what = "point lies inside the table") : Error(what) {}
};

/// Point sits exactly on a partition cell boundary.
struct OnCellBoundary : Error {
    explicit OnCellBoundary(const std::string& what = "point lies on a cell boundary")
        : Error(what) {}
};

/// Orbit exceeded the configured iteration cap before closing.
struct OrbitCapExceeded : Error {
    explicit OrbitCapExceeded(const std::string& what = "orbit cap exceeded") : Error(what) {}
};

/// Pinwheel construction could not find a vertex-pair lift for a drift vector.
struct ConstructionAmbiguous : Error {
    explicit ConstructionAmbiguous(const std::string& what) : Error(what) {}
};

/// The coordinate atlas disagrees with the derived partition.
struct AtlasInconsistent : Error {
    explicit AtlasInconsistent(const std::string& what) : Error(what) {}
};

/// A computed table failed verification against its expected content.
struct TableMismatch : Error {
    explicit TableMismatch(const std::string& what) : Error(what) {}
};

/// A vector assignment was asked for a symbol it does not define.
struct MissingSymbol : Error {
    explicit MissingSymbol(const std::string& what) : Error(what) {}
};

/// Recursive refinement hit its depth cap before deciding a query.
struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what = "refinement depth exceeded") : Error(what) {}
};

/// Malformed textual input (QuadVal literals, CLI seeds).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace octa

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fivefold {

// Domain failure carrying a stable, machine-readable name.  The CLI prints
// the name on stderr and exits 1; tests match on the name, never on the
// human-readable message, so messages are free to improve.
class Fault : public std::runtime_error {
public:
    Fault(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& detail) {
    throw Fault(name, detail);
}

namespace fault {
// Stable error names, one place.
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* NotInLattice = "NotInLattice";
inline constexpr const char* NonSquareMatrix = "NonSquareMatrix";
inline constexpr const char* ShapeMismatch = "ShapeMismatch";
inline constexpr const char* DominantRootNotQuadratic = "DominantRootNotQuadratic";
inline constexpr const char* NotAnEigenvalue = "NotAnEigenvalue";
inline constexpr const char* EigenspaceNotOneDimensional = "EigenspaceNotOneDimensional";
inline constexpr const char* SymbolOutOfRange = "SymbolOutOfRange";
inline constexpr const char* EnumerationLimitExceeded = "EnumerationLimitExceeded";
inline constexpr const char* InadmissibleWord = "InadmissibleWord";
inline constexpr const char* DanglingS = "DanglingS";
inline constexpr const char* UnclassifiableNeighborhood = "UnclassifiableNeighborhood";
inline constexpr const char* SupportViolation = "SupportViolation";
inline constexpr const char* BadArgument = "BadArgument";
} // namespace fault

} // namespace fivefold

#ifndef QFACE_ERRORS_HPP
#define QFACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qface {

enum class Errc {
    LoopEdge,
    DuplicateEdge,
    UnknownFormat,
    EmptyVertexSet,
    UnknownVertex,
    UnknownEdge,
    NotComponentwiseFull,
    NoRankFunction,
    ParentNotDouble,
    TooLarge,
    BadParams,
    ParseError,
};

const char* errc_name(Errc c);

/// Single exception type for all domain and parse errors; the code
/// distinguishes the named error conditions of the public contracts.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace qface

#endif
